#include "bruhat/sweep.hpp"
#include "bruhat/rpoly.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace bruhat;
namespace fs = std::filesystem;

namespace {

std::string body_of(const std::string& report) {
  std::istringstream in(report);
  std::string line, body;
  std::getline(in, line); // header carries the timestamp
  while (std::getline(in, line))
    body += line + '\n';
  return body;
}

std::string run_to_string(const SweepConfig& config) {
  std::ostringstream out;
  run_sweep(config, out);
  return out.str();
}

SweepConfig base_config(int n, std::set<std::string> checks) {
  SweepConfig c;
  c.n = n;
  c.checks = std::move(checks);
  return c;
}

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  const fs::path capture = fs::temp_directory_path() / "bruhat_cli_capture.txt";
  const std::string cmd =
      std::string(BRUHAT_CLI) + " --no-cache " + args + " > " + capture.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(capture);
  std::stringstream text;
  text << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text.str()};
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  return text.str();
}

} // namespace

TEST_CASE("comparable pairs and sampling") {
  CHECK(comparable_pairs(3).size() == 19);
  CHECK(comparable_pairs(4).size() == 213);
  const auto small = comparable_pairs(4, 4);
  CHECK(small.size() < 213);
  for (const auto& [u, v] : small)
    CHECK(Interval::build(u, v).size() <= 4);

  const auto a = sample_indices(1000, 50, 7);
  CHECK(a == sample_indices(1000, 50, 7));
  CHECK(a != sample_indices(1000, 50, 8));
  CHECK(a.size() == 50);
  CHECK(std::is_sorted(a.begin(), a.end()));
  CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
  CHECK(sample_indices(10, 50, 1).size() == 10);
}

TEST_CASE("canonical reduced words") {
  CHECK(canonical_reduced_words(3) == std::vector<std::vector<int>>{{1, 2, 1}, {2, 1, 2}});
  const auto words = canonical_reduced_words(4);
  CHECK(words.size() == 3);
  for (const auto& w : words)
    CHECK_NOTHROW(reflection_order_from_word(4, w));
}

TEST_CASE("configuration validation") {
  auto c = base_config(3, {"dyer"});
  CHECK_NOTHROW(c.validate());
  c.mode = SweepMode::Sample;
  c.sample_size = 10;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.seed = 1;
  CHECK_NOTHROW(c.validate());
  CHECK_THROWS_AS(base_config(5, {"strong-ds"}).validate(), ConfigError);
  CHECK_NOTHROW(base_config(5, {"dyer"}).validate());
  CHECK_THROWS_AS(base_config(6, {"dyer"}).validate(), ConfigError);
  CHECK_THROWS_AS(base_config(3, {"nonsense"}).validate(), ConfigError);
  CHECK_THROWS_AS(base_config(3, {}).validate(), ConfigError);
  CHECK(base_config(3, {"dyer"}).fingerprint() == base_config(3, {"dyer"}).fingerprint());
  CHECK(base_config(3, {"dyer"}).fingerprint() != base_config(4, {"dyer"}).fingerprint());
  CHECK(is_conjecture_check("em0"));
  CHECK_FALSE(is_conjecture_check("bologna"));
}

TEST_CASE("sweep reports are deterministic") {
  auto c = base_config(4, {"dyer", "strong-ds", "congettura", "cosimple-dh"});
  const auto first = run_to_string(c);
  CHECK(body_of(first) == body_of(run_to_string(c)));
  c.threads = 3;
  CHECK(body_of(first) == body_of(run_to_string(c)));
  CHECK(first.find("\"ms\"") == std::string::npos);

  auto sampled = base_config(5, {"strong-ds"});
  sampled.mode = SweepMode::Sample;
  sampled.sample_size = 40;
  sampled.seed = 7;
  CHECK(body_of(run_to_string(sampled)) == body_of(run_to_string(sampled)));
}

TEST_CASE("a warm cache does not change results") {
  auto c = base_config(4, {"dyer", "congettura", "bologna"});
  default_cache().clear();
  const auto cold = body_of(run_to_string(c));
  const auto warm = body_of(run_to_string(c));
  CHECK(cold == warm);
}

TEST_CASE("resumed sweeps skip finished intervals") {
  const auto c = base_config(3, {"dyer"});
  const auto full = run_to_string(c);
  std::set<std::pair<std::string, std::string>> done{{"123", "123"}, {"123", "321"}};
  std::ostringstream rest;
  const auto summary = run_sweep(c, rest, done);
  CHECK(summary.intervals == 17);
  CHECK(rest.str().find("\"u\":\"123\",\"v\":\"321\"") == std::string::npos);
  CHECK(full.find("\"u\":\"123\",\"v\":\"321\"") != std::string::npos);
}

TEST_CASE("command line") {
  auto r = cli("rtilde --u 123 --v 321 --method both");
  CHECK(r.code == 0);
  CHECK(r.out == "q^3+q | q^3+q | AGREE\n");
  r = cli("rtilde --u 123 --v 123");
  CHECK(r.out == "1\n");
  CHECK(cli("rtilde --u 213 --v 132").code == 2);
  CHECK(cli("rtilde --u 1x3 --v 321").code == 3);
  CHECK(cli("rtilde --u 123 --v 321 --method dyer --order-word 112").code == 3);
  CHECK(cli("rtilde --u 123 --v 321 --method dyer --order-word 212").out == "q^3+q\n");

  r = cli("inspect --u 123 --v 321");
  CHECK(r.code == 0);
  CHECK(r.out.find("amazing HCDs: [\"123\",\"231\",\"312\"]") != std::string::npos);
  CHECK(r.out.find("co-simple: true") != std::string::npos);
  CHECK(cli("inspect --u 321 --v 321").out.find("size: 1") != std::string::npos);
  CHECK(cli("inspect --u 123 --v 231").out.find("size: 4") != std::string::npos);
  CHECK(cli("--format json inspect --u 123 --v 321 --edges").out.find("\"edges\"") !=
        std::string::npos);

  CHECK(cli("shortcuts --u 123 --v 321 --z 231").out.find("W^231: [\"231\",\"321\"]") !=
        std::string::npos);
  CHECK(cli("ds --u 123 --v 321 --z 231 --z2 312").out.find("SYMMETRIC") != std::string::npos);
  CHECK(cli("dh --u 123 --v 321 --z 231 --z2 312").out.find("DH(231,312) = {(1,321),(3,321)}") !=
        std::string::npos);

  CHECK(cli("verify --n 3 --checks all").code == 0);
  CHECK(cli("verify --n 4 --checks dyer").code == 0);
  CHECK(cli("verify --n 6 --checks strong-ds --mode sample --sample-size 5").code == 5);
  CHECK(cli("verify --n 5 --checks strong-ds").code == 5);
  CHECK(cli("verify --n 3 --checks bogus").code == 5);
  CHECK(cli("--output /nonexistent/dir/report.jsonl verify --n 3 --checks dyer").code == 4);
}

TEST_CASE("command line resume reproduces an uninterrupted report") {
  const fs::path dir = fs::temp_directory_path() / "bruhat_resume_test";
  fs::create_directories(dir);
  const auto full = dir / "full.jsonl", part = dir / "part.jsonl";
  REQUIRE(cli("--output " + full.string() + " verify --n 4 --checks dyer,standard-hcd").code == 0);
  const auto reference = read_file(full);

  // keep the header and the first 100 records, then tear the next line
  std::istringstream in(reference);
  std::ofstream out(part);
  std::string line;
  for (int k = 0; k <= 100 && std::getline(in, line); ++k)
    out << line << '\n';
  std::getline(in, line);
  out << line.substr(0, line.size() / 2);
  out.close();

  REQUIRE(cli("--output " + part.string() + " verify --n 4 --checks dyer,standard-hcd --resume")
              .code == 0);
  CHECK(body_of(read_file(part)) == body_of(reference));
  CHECK(cli("--output " + part.string() + " verify --n 4 --checks dyer --resume").code == 5);
  fs::remove_all(dir);
}
