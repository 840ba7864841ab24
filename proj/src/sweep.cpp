#include "bruhat/sweep.hpp"

#include "bruhat/appendix_dh.hpp"
#include "bruhat/doubles.hpp"
#include "bruhat/hcd.hpp"
#include "bruhat/rpoly.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <condition_variable>
#include <ctime>
#include <iomanip>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace bruhat {

using nlohmann::json;

namespace {

constexpr int kReportVersion = 1;

const std::set<std::string> kPairwiseChecks = {"congettura", "em0",          "strong-ds",
                                               "bologna",    "cosimple-dh",  "hw-bijection",
                                               "lemma-paths"};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

json conventions() {
  return {{"edge_direction", "x -> x*t when length increases, label t = x^-1 y"},
          {"inflow_sources", "E^p sources restricted to [u,v] \\ [z,v]"},
          {"hypercube_universe", "full Bruhat graph of S_n"},
          {"dh_spanning", "top-spanned by in-arrows of p, bottom = u"}};
}

int severity(Status s) {
  switch (s) {
  case Status::Skip: return 0;
  case Status::Pass: return 1;
  case Status::Finding: return 2;
  case Status::Fail: return 3;
  }
  return 0;
}

CheckRecord aggregate(const std::string& check, const Interval& interval,
                      const std::vector<CheckRecord>& parts) {
  auto out = make_record(check, interval);
  out.status = Status::Skip;
  std::size_t skipped = 0;
  const CheckRecord* witness = nullptr;
  for (const auto& r : parts) {
    if (r.status == Status::Skip)
      ++skipped;
    if (severity(r.status) > severity(out.status)) {
      out.status = r.status;
      if (severity(r.status) >= severity(Status::Finding))
        witness = &r;
    }
  }
  out.detail["instances"] = parts.size();
  out.detail["skipped"] = skipped;
  if (witness) {
    out.z = witness->z;
    out.z2 = witness->z2;
    out.detail["witness"] = witness->detail;
  }
  return out;
}

std::vector<std::pair<int, int>> product_splits(int n) {
  std::vector<std::pair<int, int>> out;
  for (int a = 2; a <= n / 2; ++a)
    if (n - a <= 3)
      out.emplace_back(a, n - a);
  return out;
}

} // namespace

const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names = {
      "dyer",    "standard-hcd", "congettura",  "em0",          "strong-ds",
      "bologna", "product",      "cosimple-dh", "hw-bijection", "lemma-paths"};
  return names;
}

bool is_conjecture_check(const std::string& name) {
  return name == "congettura" || name == "em0" || name == "strong-ds" ||
         name == "hw-bijection";
}

void SweepConfig::validate() const {
  if (n < 1 || n > 7)
    throw ConfigError("n must be between 1 and 7");
  if (threads < 1)
    throw ConfigError("threads must be positive");
  if (checks.empty())
    throw ConfigError("no checks selected");
  for (const auto& c : checks)
    if (std::find(all_check_names().begin(), all_check_names().end(), c) ==
        all_check_names().end())
      throw ConfigError("unknown check: " + c);
  if (mode == SweepMode::Sample) {
    if (!seed)
      throw ConfigError("sample mode requires --seed");
    if (sample_size == 0)
      throw ConfigError("sample mode requires a positive --sample-size");
    return;
  }
  for (const auto& c : checks) {
    if (kPairwiseChecks.count(c) && n > 4)
      throw ConfigError("exhaustive " + c + " is limited to n <= 4; use --mode sample");
    if ((c == "dyer" || c == "standard-hcd") && n > 5)
      throw ConfigError("exhaustive " + c + " is limited to n <= 5; use --mode sample");
    if (c == "product" && n > 6)
      throw ConfigError("exhaustive product is limited to n <= 6");
  }
}

json SweepConfig::to_json() const {
  json out;
  out["n"] = n;
  out["mode"] = mode == SweepMode::Exhaustive ? "exhaustive" : "sample";
  out["sample_size"] = sample_size;
  out["seed"] = seed ? json(*seed) : json(nullptr);
  out["max_interval_size"] = max_interval_size;
  out["checks"] = checks;
  return out;
}

std::string SweepConfig::fingerprint() const {
  json basis = to_json();
  basis["conventions"] = conventions();
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << fnv1a(basis.dump());
  return out.str();
}

std::vector<std::pair<Permutation, Permutation>> comparable_pairs(int n, std::size_t max_size) {
  const auto& group = symmetric_group(n);
  const std::size_t m = group.size();
  const std::size_t words = (m + 63) / 64;
  std::vector<std::uint64_t> up(m * words, 0), down(m * words, 0);
  std::vector<int> lengths(m);
  for (std::size_t a = 0; a < m; ++a)
    lengths[a] = group[a].length();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (a == b || (lengths[a] < lengths[b] && bruhat_leq(group[a], group[b]))) {
        up[a * words + b / 64] |= std::uint64_t{1} << (b % 64);
        down[b * words + a / 64] |= std::uint64_t{1} << (a % 64);
      }

  std::vector<std::pair<Permutation, Permutation>> out;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (!(up[a * words + b / 64] >> (b % 64) & 1))
        continue;
      if (max_size > 0) {
        std::size_t size = 0;
        for (std::size_t w = 0; w < words; ++w)
          size += static_cast<std::size_t>(std::popcount(up[a * words + w] & down[b * words + w]));
        if (size > max_size)
          continue;
      }
      out.emplace_back(group[a], group[b]);
    }
  return out;
}

std::vector<std::size_t> sample_indices(std::size_t population, std::size_t count,
                                        std::uint64_t seed) {
  count = std::min(count, population);
  std::vector<std::size_t> idx(population);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t k = 0; k < count; ++k) {
    const std::uint64_t r = splitmix64(splitmix64(seed) ^ k);
    std::swap(idx[k], idx[k + r % (population - k)]);
  }
  idx.resize(count);
  std::sort(idx.begin(), idx.end());
  return idx;
}

std::vector<std::vector<int>> canonical_reduced_words(int n) {
  std::vector<int> descending, mirror, ascending;
  for (int k = 1; k < n; ++k)
    for (int s = k; s >= 1; --s)
      descending.push_back(s);
  for (int s : descending)
    mirror.push_back(n - s);
  for (int k = 1; k < n; ++k)
    for (int s = 1; s <= n - k; ++s)
      ascending.push_back(s);
  std::vector<std::vector<int>> out;
  for (auto* w : {&descending, &mirror, &ascending})
    if (std::find(out.begin(), out.end(), *w) == out.end())
      out.push_back(*w);
  return out;
}

std::vector<CheckRecord> run_interval_checks(const Interval& interval,
                                             const SweepConfig& config) {
  HcdAnalysis analysis(interval);
  const Index u = interval.bottom();
  std::vector<CheckRecord> out;
  auto want = [&](const char* name) { return config.checks.count(name) > 0; };
  auto run = [&](auto&& produce) {
    const auto start = std::chrono::steady_clock::now();
    CheckRecord r;
    try {
      r = produce();
    } catch (const std::exception& e) {
      r.status = Status::Fail;
      r.detail["error"] = e.what();
    }
    if (config.timings)
      r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                 .count();
    out.push_back(std::move(r));
  };

  // amazing decompositions are shared by most pairwise checks
  std::vector<Index> amazing;
  if (std::any_of(kPairwiseChecks.begin(), kPairwiseChecks.end(),
                  [&](const std::string& c) { return config.checks.count(c) > 0; }))
    amazing = analysis.enumerate_hcds(u, true);

  if (want("dyer")) {
    run([&] {
      auto r = make_record("dyer", interval);
      const QPoly reference = analysis.rtilde(u, interval.top());
      r.detail["rtilde"] = reference.str();
      json orders = json::array();
      for (const auto& word : canonical_reduced_words(interval.n())) {
        const auto order = reflection_order_from_word(interval.n(), word);
        const QPoly dyer = rtilde_dyer(interval, order);
        orders.push_back(order.str());
        if (dyer != reference) {
          r.status = Status::Fail;
          r.detail["order"] = order.str();
          r.detail["dyer"] = dyer.str();
        }
      }
      r.detail["orders"] = orders.size();
      return r;
    });
  }

  if (want("standard-hcd")) {
    run([&] {
      auto r = make_record("standard-hcd", interval);
      json found = json::array();
      for (const auto& s : analysis.standard_hcds(u)) {
        const Index z = interval.index_of(s.z);
        const bool hcd = analysis.is_upper_hcd(u, z);
        const bool amazing_z = hcd && analysis.is_amazing(u, z);
        const bool r_elem = amazing_z && analysis.is_amazing_r_element(u, z);
        found.push_back({s.z.str(), standard_kind_names(s.kinds)});
        if (!(hcd && amazing_z && r_elem) && r.status == Status::Pass) {
          r.status = Status::Fail;
          r.z = s.z;
          r.detail["upper_hcd"] = hcd;
          r.detail["amazing"] = amazing_z;
          r.detail["amazing_r_element"] = r_elem;
        }
      }
      r.detail["standard"] = std::move(found);
      return r;
    });
  }

  if (want("congettura"))
    run([&] { return verify_congettura(analysis); });
  if (want("em0"))
    run([&] { return verify_em0(analysis); });
  if (want("strong-ds"))
    run([&] { return verify_strong_ds(analysis); });

  if (want("bologna")) {
    run([&] {
      std::vector<CheckRecord> parts;
      for (Index z : amazing)
        for (Index z2 : amazing)
          parts.push_back(verify_bologna(analysis, z, z2));
      auto r = aggregate("bologna", interval, parts);
      r.detail["hypotheses_held"] = std::count_if(parts.begin(), parts.end(), [](const auto& p) {
        return p.status != Status::Skip;
      });
      return r;
    });
  }

  std::vector<Index> standard;
  if (want("cosimple-dh") || want("lemma-paths"))
    for (const auto& s : analysis.standard_hcds(u))
      standard.push_back(interval.index_of(s.z));
  const bool cosimple = is_cosimple(interval);
  auto is_standard = [&](Index z) {
    return std::find(standard.begin(), standard.end(), z) != standard.end();
  };

  if (want("cosimple-dh")) {
    run([&] {
      if (!cosimple) {
        auto r = make_record("cosimple-dh", interval);
        r.status = Status::Skip;
        r.detail["reason"] = "not co-simple";
        return r;
      }
      std::vector<CheckRecord> parts;
      for (std::size_t a = 0; a < amazing.size(); ++a)
        for (std::size_t b = a + 1; b < amazing.size(); ++b) {
          const bool backed = is_standard(amazing[a]) && is_standard(amazing[b]);
          parts.push_back(verify_dh_symmetry(analysis, amazing[a], amazing[b],
                                             backed ? Status::Fail : Status::Finding));
        }
      auto r = aggregate("cosimple-dh", interval, parts);
      if (parts.empty())
        r.status = Status::Pass;
      return r;
    });
  }

  if (want("hw-bijection")) {
    run([&] {
      std::vector<CheckRecord> parts;
      for (Index z : amazing)
        parts.push_back(verify_hw_projection(analysis, z));
      return aggregate("hw-bijection", interval, parts);
    });
  }

  if (want("lemma-paths")) {
    run([&] {
      if (!cosimple) {
        auto r = make_record("lemma-paths", interval);
        r.status = Status::Skip;
        r.detail["reason"] = "not co-simple";
        return r;
      }
      std::vector<CheckRecord> coatom_parts, edge_parts, span_parts;
      for (Index z : standard) {
        coatom_parts.push_back(verify_lemma_incpaths(analysis, z, LemmaReading::Coatoms));
        edge_parts.push_back(verify_lemma_incpaths(analysis, z, LemmaReading::Edges));
        span_parts.push_back(verify_lemma_incpaths(analysis, z, LemmaReading::Span));
      }
      auto r = aggregate("lemma-paths", interval, coatom_parts);
      for (auto* parts : {&edge_parts, &span_parts}) {
        const auto other = aggregate("lemma-paths", interval, *parts);
        r.detail[parts == &edge_parts ? "edge_reading" : "span_reading"] = {
            {"status", to_string(other.status)},
            {"instances", other.detail["instances"]},
            {"skipped", other.detail["skipped"]}};
      }
      bool identity = true;
      for (const auto& p : coatom_parts)
        if (p.detail.contains("convolution_identity"))
          identity = identity && p.detail["convolution_identity"].get<bool>();
      r.detail["convolution_identity"] = identity;
      return r;
    });
  }

  return out;
}

std::vector<CheckRecord> run_product_checks(const SweepConfig& config) {
  std::vector<CheckRecord> out;
  for (auto [a, b] : product_splits(config.n)) {
    const auto left = comparable_pairs(a);
    const auto right = comparable_pairs(b);
    std::vector<std::pair<std::size_t, std::size_t>> combos;
    for (std::size_t i = 0; i < left.size(); ++i)
      for (std::size_t j = 0; j < right.size(); ++j)
        combos.emplace_back(i, j);
    std::vector<std::size_t> chosen(combos.size());
    std::iota(chosen.begin(), chosen.end(), 0);
    if (config.mode == SweepMode::Sample)
      chosen = sample_indices(combos.size(), config.sample_size, *config.seed);

    for (std::size_t k : chosen) {
      const auto first = Interval::build(left[combos[k].first].first, left[combos[k].first].second);
      const auto second =
          Interval::build(right[combos[k].second].first, right[combos[k].second].second);
      if (config.max_interval_size && first.size() * second.size() > config.max_interval_size)
        continue;
      HcdAnalysis fa(first), sa(second);
      const auto am1 = fa.enumerate_hcds(first.bottom(), true);
      const auto am2 = sa.enumerate_hcds(second.bottom(), true);
      std::vector<ProductPair> pairs;
      for (Index z1 : am1)
        for (Index z1p : am1)
          for (Index z2 : am2)
            for (Index z2p : am2)
              pairs.push_back({first.at(z1), first.at(z1p), second.at(z2), second.at(z2p)});
      out.push_back(verify_product(first, second, pairs));
    }
  }
  return out;
}

json report_header(const SweepConfig& config) {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream stamp;
  stamp << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return {{"report_version", kReportVersion},
          {"fingerprint", config.fingerprint()},
          {"conventions", conventions()},
          {"config", config.to_json()},
          {"started", stamp.str()}};
}

std::string format_record(const CheckRecord& record, const SweepConfig& config) {
  if (config.format == ReportFormat::Text)
    return to_text(record);
  return to_json(record).dump();
}

namespace {

struct Task {
  std::string key;
  std::function<std::vector<CheckRecord>()> run;
};

} // namespace

SweepSummary run_sweep(const SweepConfig& config, std::ostream& out,
                       const std::set<std::pair<std::string, std::string>>& resumed_pairs) {
  config.validate();
  SweepSummary summary;

  if (resumed_pairs.empty()) {
    if (config.format == ReportFormat::Text)
      out << "# " << report_header(config).dump() << '\n';
    else
      out << report_header(config).dump() << '\n';
  }

  std::set<std::string> interval_checks = config.checks;
  interval_checks.erase("product");
  std::vector<Task> tasks;
  if (!interval_checks.empty()) {
    auto pairs = comparable_pairs(config.n, config.max_interval_size);
    std::vector<std::size_t> chosen(pairs.size());
    std::iota(chosen.begin(), chosen.end(), 0);
    if (config.mode == SweepMode::Sample)
      chosen = sample_indices(pairs.size(), config.sample_size, *config.seed);
    for (std::size_t k : chosen) {
      const auto [u, v] = pairs[k];
      if (resumed_pairs.count({u.str(), v.str()}))
        continue;
      tasks.push_back({u.str() + "," + v.str(), [u, v, &config] {
                         return run_interval_checks(Interval::build(u, v), config);
                       }});
    }
  }
  if (config.checks.count("product") && !resumed_pairs.count({"product", ""})) {
    // product intervals are cheap; one task keeps their order fixed
    tasks.push_back({"product", [&config] {
                       std::vector<CheckRecord> kept;
                       for (auto& r : run_product_checks(config))
                         kept.push_back(std::move(r));
                       return kept;
                     }});
  }

  std::vector<std::optional<std::vector<CheckRecord>>> results(tasks.size());
  std::mutex mutex;
  std::condition_variable ready;
  std::size_t next = 0;

  auto worker = [&] {
    for (;;) {
      std::size_t k;
      {
        std::lock_guard lock(mutex);
        if (next >= tasks.size())
          return;
        k = next++;
      }
      std::vector<CheckRecord> records;
      try {
        records = tasks[k].run();
      } catch (const std::exception& e) {
        CheckRecord r;
        r.check = "error";
        r.status = Status::Fail;
        r.detail["task"] = tasks[k].key;
        r.detail["error"] = e.what();
        records.push_back(std::move(r));
      }
      {
        std::lock_guard lock(mutex);
        results[k] = std::move(records);
      }
      ready.notify_one();
    }
  };

  std::vector<std::thread> pool;
  const int workers = std::min<int>(config.threads, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
  for (int t = 0; t < workers; ++t)
    pool.emplace_back(worker);

  for (std::size_t k = 0; k < tasks.size(); ++k) {
    std::vector<CheckRecord> batch;
    {
      std::unique_lock lock(mutex);
      ready.wait(lock, [&] { return results[k].has_value(); });
      batch = std::move(*results[k]);
      results[k].reset();
    }
    for (const auto& r : batch) {
      out << format_record(r, config) << '\n';
      ++summary.records;
      switch (r.status) {
      case Status::Pass: ++summary.passes; break;
      case Status::Fail: ++summary.failures; break;
      case Status::Finding: ++summary.findings; break;
      case Status::Skip: ++summary.skips; break;
      }
    }
    out.flush();
    if (tasks[k].key != "product")
      ++summary.intervals;
  }
  for (auto& t : pool)
    t.join();
  return summary;
}

} // namespace bruhat
