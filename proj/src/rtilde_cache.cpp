#include "bruhat/rtilde_cache.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <mutex>

namespace bruhat {

using nlohmann::json;

std::optional<QPoly> RtildeCache::lookup(const Permutation& u,
                                         const Permutation& v) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find({u.n(), u.key(), v.key()});
  if (it == entries_.end())
    return std::nullopt;
  return it->second.value;
}

void RtildeCache::store(const Permutation& u, const Permutation& v,
                        const QPoly& value) {
  std::unique_lock lock(mutex_);
  entries_.insert_or_assign(Key{u.n(), u.key(), v.key()}, Entry{u, v, value});
}

std::size_t RtildeCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

void RtildeCache::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
}

void RtildeCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    if (std::filesystem::exists(path))
      throw CacheError("cannot read cache " + path.string());
    return;
  }
  std::string line;
  bool header = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty())
      continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error&) {
      throw CacheError(path.string() + ":" + std::to_string(lineno) + ": malformed line");
    }
    if (!header) {
      if (!record.contains("cache_version") || record["cache_version"] != kVersion)
        throw CacheError(path.string() + ": unsupported cache version");
      header = true;
      continue;
    }
    try {
      const auto u = Permutation::parse(record.at("u").get<std::string>());
      const auto v = Permutation::parse(record.at("v").get<std::string>());
      if (u.n() != record.at("n").get<int>() || v.n() != u.n())
        throw CacheError("rank field disagrees with permutations");
      std::vector<BigInt> coeffs;
      for (const auto& c : record.at("coeffs")) {
        if (c.is_string())
          coeffs.emplace_back(c.get<std::string>());
        else
          coeffs.emplace_back(c.get<std::uint64_t>());
      }
      store(u, v, QPoly(std::move(coeffs)));
    } catch (const CacheError&) {
      throw;
    } catch (const std::exception& e) {
      throw CacheError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

void RtildeCache::save(const std::filesystem::path& path) const {
  std::vector<const Entry*> sorted;
  {
    std::shared_lock lock(mutex_);
    sorted.reserve(entries_.size());
    for (const auto& [key, entry] : entries_)
      sorted.push_back(&entry);
    std::sort(sorted.begin(), sorted.end(), [](const Entry* a, const Entry* b) {
      if (a->u != b->u)
        return a->u < b->u;
      return a->v < b->v;
    });

    auto tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out)
        throw CacheError("cannot write cache " + tmp.string());
      out << json{{"cache_version", kVersion}}.dump() << '\n';
      const BigInt max64 = std::numeric_limits<std::uint64_t>::max();
      for (const Entry* e : sorted) {
        json coeffs = json::array();
        for (const auto& c : e->value.coeffs()) {
          if (c >= 0 && c <= max64)
            coeffs.push_back(c.convert_to<std::uint64_t>());
          else
            coeffs.push_back(c.str());
        }
        json record;
        record["n"] = e->u.n();
        record["u"] = e->u.str();
        record["v"] = e->v.str();
        record["coeffs"] = std::move(coeffs);
        out << record.dump() << '\n';
      }
      if (!out)
        throw CacheError("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
      throw CacheError("cannot replace cache " + path.string() + ": " + ec.message());
  }
}

RtildeCache& default_cache() {
  static RtildeCache cache;
  return cache;
}

std::optional<std::filesystem::path> cache_path_from_env() {
  if (const char* p = std::getenv("BRUHAT_CACHE"); p && *p)
    return std::filesystem::path(p);
  return std::nullopt;
}

} // namespace bruhat
