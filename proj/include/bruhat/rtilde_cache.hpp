#pragma once

#include "bruhat/permutation.hpp"
#include "bruhat/qpoly.hpp"

#include <filesystem>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

namespace bruhat {

class CacheError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Thread-safe memo of R-tilde polynomials keyed by (n, u, v).
///
/// On disk the cache is JSON lines: a header {"cache_version":1} followed by
/// one {"n":..,"u":..,"v":..,"coeffs":[..]} record per entry. Coefficients
/// that do not fit in 64 bits are written as decimal strings.
class RtildeCache {
public:
  static constexpr int kVersion = 1;

  std::optional<QPoly> lookup(const Permutation& u, const Permutation& v) const;
  void store(const Permutation& u, const Permutation& v, const QPoly& value);

  std::size_t size() const;
  void clear();

  /// Merges entries from a cache file. A missing file is not an error.
  void load(const std::filesystem::path& path);
  /// Rewrites the file with every entry, sorted by (n, u, v).
  void save(const std::filesystem::path& path) const;

private:
  struct Key {
    int n;
    std::uint64_t u;
    std::uint64_t v;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.u * 0x9e3779b97f4a7c15ULL ^ k.v) + k.n;
    }
  };
  struct Entry {
    Permutation u, v;
    QPoly value;
  };

  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Entry, KeyHash> entries_;
};

/// Process-wide cache used when no cache is passed explicitly.
RtildeCache& default_cache();

/// Cache path from the BRUHAT_CACHE environment variable, if set.
std::optional<std::filesystem::path> cache_path_from_env();

} // namespace bruhat
