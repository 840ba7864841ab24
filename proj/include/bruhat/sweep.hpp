#pragma once

// Sweeps of verification checks over the intervals of S_n, exhaustive or
// seeded-sampled, with an ordered JSON-lines report.

#include "bruhat/report.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace bruhat {

class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class SweepMode { Exhaustive, Sample };
enum class ReportFormat { Json, Text };

/// Every check name accepted by --checks.
const std::vector<std::string>& all_check_names();
/// Checks whose violations are conjectural findings rather than failures.
bool is_conjecture_check(const std::string& name);

struct SweepConfig {
  int n = 3;
  SweepMode mode = SweepMode::Exhaustive;
  std::size_t sample_size = 0;
  std::optional<std::uint64_t> seed;
  std::size_t max_interval_size = 0; // 0: unbounded
  std::set<std::string> checks;
  int threads = 1;
  std::optional<std::filesystem::path> cache_path;
  std::optional<std::filesystem::path> output_path;
  ReportFormat format = ReportFormat::Json;
  bool timings = false;
  bool resume = false;

  /// Throws ConfigError.
  void validate() const;
  nlohmann::json to_json() const;
  /// Stable hash over every field that affects results.
  std::string fingerprint() const;
};

/// Comparable pairs (u, v) of S_n in lexicographic order, optionally only
/// those with |[u,v]| <= max_size.
std::vector<std::pair<Permutation, Permutation>> comparable_pairs(int n,
                                                                  std::size_t max_size = 0);

/// Deterministic choice of `count` items out of `population` driven by a
/// counter-based generator; returned sorted.
std::vector<std::size_t> sample_indices(std::size_t population, std::size_t count,
                                        std::uint64_t seed);

/// Fixed reduced words of w0 used by the Dyer sweep: descending staircase,
/// its mirror image, and the ascending staircase (deduplicated).
std::vector<std::vector<int>> canonical_reduced_words(int n);

/// Runs the configured per-interval checks on one interval.
std::vector<CheckRecord> run_interval_checks(const Interval& interval,
                                             const SweepConfig& config);

/// Product-theorem records for all splits n = a + b with 1 <= a <= b.
std::vector<CheckRecord> run_product_checks(const SweepConfig& config);

struct SweepSummary {
  std::size_t intervals = 0;
  std::size_t records = 0;
  std::size_t passes = 0;
  std::size_t failures = 0;
  std::size_t findings = 0;
  std::size_t skips = 0;
};

/// Header line fields: version, fingerprint, conventions, config, timestamp.
nlohmann::json report_header(const SweepConfig& config);

/// Runs the sweep writing the report body to `out` (header included unless
/// `resumed_pairs` is non-empty). Intervals listed in `resumed_pairs` are
/// skipped; the entry {"product", ""} skips the product records.
SweepSummary run_sweep(const SweepConfig& config, std::ostream& out,
                       const std::set<std::pair<std::string, std::string>>& resumed_pairs = {});

std::string format_record(const CheckRecord& record, const SweepConfig& config);

} // namespace bruhat
