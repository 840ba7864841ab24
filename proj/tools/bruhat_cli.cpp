// bruhat: command-line driver for R-tilde polynomials, decomposition queries
// and verification sweeps over Bruhat intervals of S_n.

#include "bruhat/appendix_dh.hpp"
#include "bruhat/doubles.hpp"
#include "bruhat/hcd.hpp"
#include "bruhat/rpoly.hpp"
#include "bruhat/sweep.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace {

using namespace bruhat;
using nlohmann::json;

enum ExitCode : int {
  kOk = 0,
  kFailures = 1,
  kOrderError = 2,
  kParseError = 3,
  kIoError = 4,
  kConfigError = 5,
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string cache;
  bool no_cache = false;
  int threads = 1;
  std::string format; // empty: json for verify, text elsewhere
  std::string output;
};

class Output {
public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::trunc);
      if (!file_)
        throw IoError("cannot open " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> word;
  if (text.find(',') != std::string::npos) {
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
      word.push_back(std::stoi(item));
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw InvalidOrder("bad reduced word: " + text);
      word.push_back(c - '0');
    }
  }
  return word;
}

Interval checked_interval(const std::string& u, const std::string& v) {
  return Interval::build(Permutation::parse(u), Permutation::parse(v));
}

std::vector<std::string> to_strings(const Interval& interval, const std::vector<Index>& ix) {
  std::vector<std::string> out;
  for (Index a : ix)
    out.push_back(interval.at(a).str());
  return out;
}

int cmd_rtilde(const Globals& g, const std::string& u_text, const std::string& v_text,
               const std::string& method, const std::string& order_word) {
  const auto u = Permutation::parse(u_text);
  const auto v = Permutation::parse(v_text);
  if (u.n() != v.n() || !bruhat_leq(u, v))
    throw NotComparable(u.str() + " is not below " + v.str());

  std::optional<QPoly> recurrence, dyer;
  std::optional<ReflectionOrder> order;
  if (method == "recurrence" || method == "both")
    recurrence = rtilde_recurrence(u, v);
  if (method == "dyer" || method == "both") {
    const auto word =
        order_word.empty() ? canonical_reduced_words(u.n()).front() : parse_word(order_word);
    order = reflection_order_from_word(u.n(), word);
    dyer = rtilde_dyer(Interval::build(u, v), *order);
  }

  Output out(g.output);
  if (g.format == "json") {
    json j{{"u", u.str()}, {"v", v.str()}};
    if (recurrence)
      j["recurrence"] = {{"poly", recurrence->str()}, {"coeffs", json::array()}};
    if (recurrence)
      for (const auto& c : recurrence->coeffs())
        j["recurrence"]["coeffs"].push_back(c.str());
    if (dyer) {
      j["dyer"] = {{"poly", dyer->str()}, {"order", order->str()}};
    }
    if (recurrence && dyer)
      j["agree"] = *recurrence == *dyer;
    out.stream() << j.dump() << '\n';
  } else if (recurrence && dyer) {
    out.stream() << recurrence->str() << " | " << dyer->str() << " | "
                 << (*recurrence == *dyer ? "AGREE" : "DISAGREE") << '\n';
  } else {
    out.stream() << (recurrence ? *recurrence : *dyer).str() << '\n';
  }
  return recurrence && dyer && *recurrence != *dyer ? kFailures : kOk;
}

int cmd_inspect(const Globals& g, const std::string& u_text, const std::string& v_text,
                bool edges) {
  const auto interval = checked_interval(u_text, v_text);
  HcdAnalysis analysis(interval);
  const Index u = interval.bottom();

  json standard = json::array();
  for (const auto& s : analysis.standard_hcds(u))
    standard.push_back({{"z", s.z.str()}, {"kinds", standard_kind_names(s.kinds)}});
  const auto all = analysis.enumerate_hcds(u, false);
  const auto amazing = analysis.enumerate_hcds(u, true);
  json shortcut_sets = json::object();
  for (Index z : amazing)
    shortcut_sets[interval.at(z).str()] = to_strings(interval, analysis.shortcuts(u, z));

  json j = edges ? interval_dump(interval) : interval_summary(interval);
  j["rtilde"] = analysis.rtilde(u, interval.top()).str();
  j["standard_hcds"] = standard;
  j["hcds"] = to_strings(interval, all);
  j["amazing_hcds"] = to_strings(interval, amazing);
  j["cosimple"] = is_cosimple(interval);
  j["shortcuts"] = shortcut_sets;

  Output out(g.output);
  if (g.format == "json") {
    out.stream() << j.dump() << '\n';
    return kOk;
  }
  auto& os = out.stream();
  os << "interval [" << interval.u().str() << "," << interval.v().str() << "] in S_"
     << interval.n() << "\n";
  os << "size: " << interval.size() << "\n";
  os << "rtilde: " << j["rtilde"].get<std::string>() << "\n";
  os << "standard HCDs:";
  for (const auto& s : standard)
    os << " " << s["z"].get<std::string>() << " (" << s["kinds"].get<std::string>() << ")";
  os << "\nHCDs: " << json(j["hcds"]).dump() << "\n";
  os << "amazing HCDs: " << json(j["amazing_hcds"]).dump() << "\n";
  os << "co-simple: " << (j["cosimple"].get<bool>() ? "true" : "false") << "\n";
  for (auto it = shortcut_sets.begin(); it != shortcut_sets.end(); ++it)
    os << "shortcuts W^" << it.key() << ": " << it.value().dump() << "\n";
  if (edges)
    for (const auto& e : j["edges"])
      os << "edge " << e[0].get<std::string>() << " -> " << e[1].get<std::string>() << " "
         << e[2].get<std::string>() << "\n";
  return kOk;
}

int cmd_shortcuts(const Globals& g, const std::string& u_text, const std::string& v_text,
                  const std::string& z_text) {
  const auto interval = checked_interval(u_text, v_text);
  HcdAnalysis analysis(interval);
  const Index z = interval.index_of(Permutation::parse(z_text));
  const Index u = interval.bottom();
  json j = interval_summary(interval);
  j["z"] = interval.at(z).str();
  j["upper_hcd"] = analysis.is_upper_hcd(u, z);
  j["amazing"] = analysis.is_amazing(u, z);
  j["shortcuts"] = to_strings(interval, analysis.shortcuts(u, z));
  j["rtilde_z"] = analysis.rtilde_z(u, z).str();
  j["rtilde"] = analysis.rtilde(u, interval.top()).str();
  j["r_element"] = analysis.is_r_element(u, z);

  Output out(g.output);
  if (g.format == "json") {
    out.stream() << j.dump() << '\n';
  } else {
    auto& os = out.stream();
    os << "W^" << j["z"].get<std::string>() << ": " << j["shortcuts"].dump() << "\n";
    os << "upper HCD: " << j["upper_hcd"] << ", amazing: " << j["amazing"] << "\n";
    os << "rtilde^z: " << j["rtilde_z"].get<std::string>()
       << "  rtilde: " << j["rtilde"].get<std::string>()
       << "  R-element: " << j["r_element"] << "\n";
  }
  return kOk;
}

int cmd_double(const Globals& g, const std::string& kind, const std::string& u_text,
               const std::string& v_text, const std::string& z_text,
               const std::string& z2_text) {
  const auto interval = checked_interval(u_text, v_text);
  HcdAnalysis analysis(interval);
  const Index u = interval.bottom();
  const Index z = interval.index_of(Permutation::parse(z_text));
  const Index z2 = interval.index_of(Permutation::parse(z2_text));
  auto compute = [&](Index a, Index b) {
    return kind == "ds" ? ds_multiset(analysis, u, a, b) : dh_multiset(analysis, u, a, b);
  };
  const auto forward = compute(z, z2);
  const auto backward = compute(z2, z);
  const bool symmetric = forward == backward;

  Output out(g.output);
  if (g.format == "json") {
    json j = interval_summary(interval);
    j["z"] = interval.at(z).str();
    j["z2"] = interval.at(z2).str();
    j[kind] = forward.to_json();
    j[kind + "_reversed"] = backward.to_json();
    j["symmetric"] = symmetric;
    out.stream() << j.dump() << '\n';
  } else {
    const std::string name = kind == "ds" ? "DS" : "DH";
    out.stream() << name << "(" << z_text << "," << z2_text << ") = " << forward.str() << "\n"
                 << name << "(" << z2_text << "," << z_text << ") = " << backward.str() << "\n"
                 << (symmetric ? "SYMMETRIC" : "ASYMMETRIC") << "\n";
  }
  return kOk;
}

// Intervals whose records are all present in an earlier report. The file is
// cut back to the end of the last complete interval; product records are
// always recomputed.
std::set<std::pair<std::string, std::string>> read_resumable(const std::filesystem::path& path,
                                                            const SweepConfig& config) {
  std::set<std::pair<std::string, std::string>> done;
  std::ifstream in(path, std::ios::binary);
  if (!in)
    return done;
  const std::size_t per_interval = config.checks.size() - config.checks.count("product");

  std::string line;
  std::uintmax_t offset = 0, keep = 0;
  bool header = false;
  std::pair<std::string, std::string> group;
  std::size_t group_size = 0;
  while (std::getline(in, line)) {
    if (in.eof())
      break; // no trailing newline: torn write
    offset += line.size() + 1;
    json record = json::parse(line, nullptr, false);
    if (record.is_discarded())
      break;
    if (!header) {
      if (record.value("fingerprint", "") != config.fingerprint())
        throw ConfigError("existing report has a different configuration fingerprint");
      header = true;
      keep = offset;
      continue;
    }
    if (record.value("check", "") == "product" || !record.contains("u"))
      break;
    const std::pair<std::string, std::string> key{record["u"].get<std::string>(),
                                                  record["v"].get<std::string>()};
    if (key != group) {
      group = key;
      group_size = 0;
    }
    if (++group_size == per_interval) {
      done.insert(group);
      keep = offset;
    }
  }
  in.close();
  if (!header)
    return {};
  std::filesystem::resize_file(path, keep);
  return done;
}

int cmd_verify(const Globals& g, SweepConfig config, const std::vector<std::string>& checks) {
  for (const auto& c : checks) {
    if (c == "all")
      config.checks.insert(all_check_names().begin(), all_check_names().end());
    else
      config.checks.insert(c);
  }
  config.threads = g.threads;
  config.format = g.format == "text" ? ReportFormat::Text : ReportFormat::Json;
  if (!g.output.empty())
    config.output_path = g.output;
  config.validate();
  if (config.resume && (!config.output_path || config.format != ReportFormat::Json))
    throw ConfigError("--resume needs --output and json format");

  std::set<std::pair<std::string, std::string>> done;
  std::ofstream file;
  if (config.output_path) {
    if (config.resume)
      done = read_resumable(*config.output_path, config);
    file.open(*config.output_path, done.empty() ? std::ios::trunc : std::ios::app);
    if (!file)
      throw IoError("cannot open " + config.output_path->string());
  }
  std::ostream& os = file.is_open() ? file : std::cout;
  const auto summary = run_sweep(config, os, done);
  if (!os)
    throw IoError("report write failed");
  std::cerr << "intervals " << summary.intervals << ", records " << summary.records
            << ": " << summary.passes << " pass, " << summary.failures << " fail, "
            << summary.findings << " finding, " << summary.skips << " skip\n";
  return summary.failures == 0 ? kOk : kFailures;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bruhat interval combinatorics: R-tilde polynomials, hypercube "
               "decompositions, double shortcuts and verification sweeps"};
  app.require_subcommand(1);

  Globals g;
  app.add_option("--cache", g.cache, "R-tilde cache file (default: $BRUHAT_CACHE)");
  app.add_flag("--no-cache", g.no_cache, "Do not read or write the cache file");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", g.output, "Write output to this file");

  std::string u, v, z, z2, method = "recurrence", order_word;
  bool edges = false;

  auto* rtilde = app.add_subcommand("rtilde", "R-tilde polynomial of [u,v]");
  rtilde->add_option("--u", u)->required();
  rtilde->add_option("--v", v)->required();
  rtilde->add_option("--method", method)->check(CLI::IsMember({"recurrence", "dyer", "both"}));
  rtilde->add_option("--order-word", order_word, "Reduced word of w0 for the Dyer method");

  auto* inspect = app.add_subcommand("inspect", "Summary of an interval");
  inspect->add_option("--u", u)->required();
  inspect->add_option("--v", v)->required();
  inspect->add_flag("--edges", edges, "Include every Bruhat-graph arrow");

  auto* shortcuts_cmd = app.add_subcommand("shortcuts", "Shortcut set of z");
  shortcuts_cmd->add_option("--u", u)->required();
  shortcuts_cmd->add_option("--v", v)->required();
  shortcuts_cmd->add_option("--z", z)->required();

  auto* ds = app.add_subcommand("ds", "Double-shortcut multisets DS(z,z') and DS(z',z)");
  auto* dh = app.add_subcommand("dh", "Double-hypercube multisets DH(z,z') and DH(z',z)");
  for (auto* cmd : {ds, dh}) {
    cmd->add_option("--u", u)->required();
    cmd->add_option("--v", v)->required();
    cmd->add_option("--z", z)->required();
    cmd->add_option("--z2", z2)->required();
  }

  SweepConfig config;
  std::string mode = "exhaustive";
  std::vector<std::string> checks;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "Sweep verification checks over S_n");
  verify->add_option("--n", config.n)->required();
  verify->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "sample"}));
  verify->add_option("--sample-size", config.sample_size);
  auto* seed_opt = verify->add_option("--seed", seed);
  verify->add_option("--max-interval-size", config.max_interval_size);
  verify->add_option("--checks", checks, "Checks to run, or 'all'")->delimiter(',')->required();
  verify->add_flag("--timings", config.timings, "Add per-record milliseconds");
  verify->add_flag("--resume", config.resume, "Continue an interrupted JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ValidationError& e) {
    app.exit(e);
    return kConfigError;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  std::optional<std::filesystem::path> cache_path;
  if (!g.no_cache)
    cache_path = g.cache.empty() ? cache_path_from_env() : std::filesystem::path(g.cache);

  try {
    if (cache_path)
      default_cache().load(*cache_path);

    int code = kOk;
    if (*rtilde) {
      code = cmd_rtilde(g, u, v, method, order_word);
    } else if (*inspect) {
      code = cmd_inspect(g, u, v, edges);
    } else if (*shortcuts_cmd) {
      code = cmd_shortcuts(g, u, v, z);
    } else if (*ds) {
      code = cmd_double(g, "ds", u, v, z, z2);
    } else if (*dh) {
      code = cmd_double(g, "dh", u, v, z, z2);
    } else if (*verify) {
      config.mode = mode == "sample" ? SweepMode::Sample : SweepMode::Exhaustive;
      if (*seed_opt)
        config.seed = seed;
      config.cache_path = cache_path;
      code = cmd_verify(g, config, checks);
    }

    if (cache_path)
      default_cache().save(*cache_path);
    return code;
  } catch (const NotComparable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOrderError;
  } catch (const InvalidOrder& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const RankMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const NotInInterval& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOrderError;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const CacheError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailures;
  }
}
