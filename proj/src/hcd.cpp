#include "bruhat/hcd.hpp"

#include "bruhat/rpoly.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace bruhat {

namespace {

bool is_arrow(const Permutation& x, const Permutation& y) {
  return reflection_between(x, y, nullptr) && x.length() < y.length();
}

std::vector<Permutation> in_neighbors(const Permutation& y) {
  std::vector<Permutation> out;
  for (int i = 1; i <= y.n(); ++i)
    for (int j = i + 1; j <= y.n(); ++j)
      if (y(i) > y(j))
        out.push_back(y.times({i, j}));
  return out;
}

void check_edge_set(const EdgeSet& edges) {
  if (edges.size() > 20)
    throw std::invalid_argument("edge set too large for hypercube search");
  for (std::size_t a = 0; a < edges.size(); ++a) {
    if (!is_arrow(edges.sources[a], edges.target))
      throw std::invalid_argument(edges.sources[a].str() + " -> " + edges.target.str() +
                                  " is not a Bruhat-graph arrow");
    for (std::size_t b = 0; b < a; ++b)
      if (edges.sources[a] == edges.sources[b])
        throw std::invalid_argument("repeated arrow in edge set");
  }
}

// Fills theta level by level from the top, each vertex chosen among the
// common in-neighbors of its already placed supersets. Returns the number of
// complete assignments found, stopping at cap.
int search_embeddings(const EdgeSet& edges, int cap, HypercubeEmbedding* first) {
  check_edge_set(edges);
  const int r = static_cast<int>(edges.size());
  const unsigned full = (1u << r) - 1;
  std::vector<Permutation> theta(std::size_t{1} << r);
  theta[full] = edges.target;
  std::unordered_set<Permutation> used{edges.target};
  for (int k = 0; k < r; ++k) {
    theta[full & ~(1u << k)] = edges.sources[k];
    used.insert(edges.sources[k]);
  }

  std::vector<unsigned> open;
  for (unsigned mask = 0; mask < full; ++mask)
    if (std::popcount(mask) <= r - 2)
      open.push_back(mask);
  std::stable_sort(open.begin(), open.end(), [](unsigned a, unsigned b) {
    return std::popcount(a) > std::popcount(b);
  });

  int found = 0;
  auto dfs = [&](auto&& self, std::size_t k) -> bool {
    if (k == open.size()) {
      if (found++ == 0 && first) {
        first->assignment = theta;
        first->rank = r;
      }
      return found < cap;
    }
    const unsigned mask = open[k];
    const unsigned missing = full & ~mask;
    const int pivot = std::countr_zero(missing);
    for (const auto& c : in_neighbors(theta[mask | (1u << pivot)])) {
      if (used.count(c))
        continue;
      bool ok = true;
      for (unsigned rest = missing & ~(1u << pivot); rest && ok; rest &= rest - 1)
        ok = is_arrow(c, theta[mask | (1u << std::countr_zero(rest))]);
      if (!ok)
        continue;
      theta[mask] = c;
      used.insert(c);
      const bool more = self(self, k + 1);
      used.erase(c);
      if (!more)
        return false;
    }
    return true;
  };
  dfs(dfs, 0);
  return found;
}

bool incomparable(const Permutation& a, const Permutation& b) {
  return !bruhat_leq(a, b) && !bruhat_leq(b, a);
}

template <class Visit>
void for_each_antichain(const std::vector<Permutation>& items, Visit&& visit) {
  std::vector<std::size_t> chosen;
  auto dfs = [&](auto&& self, std::size_t start) -> bool {
    if (!visit(chosen))
      return false;
    for (std::size_t k = start; k < items.size(); ++k) {
      bool ok = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) {
        return incomparable(items[c], items[k]);
      });
      if (!ok)
        continue;
      chosen.push_back(k);
      const bool more = self(self, k + 1);
      chosen.pop_back();
      if (!more)
        return false;
    }
    return true;
  };
  dfs(dfs, 0);
}

EdgeSet subset(const EdgeSet& edges, const std::vector<std::size_t>& pick) {
  EdgeSet out{edges.target, {}};
  for (auto k : pick)
    out.sources.push_back(edges.sources[k]);
  return out;
}

} // namespace

std::optional<HypercubeEmbedding> spans_hypercube(const EdgeSet& edges) {
  HypercubeEmbedding cube;
  if (search_embeddings(edges, 2, &cube) != 1)
    return std::nullopt;
  return cube;
}

std::optional<HypercubeEmbedding> spans_hypercube(const Interval& interval,
                                                  const EdgeSet& edges) {
  const Index p = interval.index_of(edges.target);
  for (const auto& s : edges.sources)
    if (!interval.edge_between(interval.index_of(s), p))
      throw std::invalid_argument("arrow not in interval");
  return spans_hypercube(edges);
}

int count_hypercube_embeddings(const EdgeSet& edges, int cap) {
  return search_embeddings(edges, cap, nullptr);
}

bool spans_cluster(const EdgeSet& edges) {
  bool ok = true;
  for_each_antichain(edges.sources, [&](const std::vector<std::size_t>& pick) {
    if (pick.size() >= 2 && !spans_hypercube(subset(edges, pick)))
      ok = false;
    return ok;
  });
  return ok;
}

bool spans_cluster(const Interval& interval, const EdgeSet& edges) {
  HcdAnalysis analysis(interval);
  return analysis.spans_cluster(edges);
}

// --- HcdAnalysis ------------------------------------------------------------

HcdAnalysis::HcdAnalysis(const Interval& interval, RtildeCache& cache)
    : interval_(interval), cache_(cache), m_(interval.size()),
      hcd_(m_ * m_, -1), amazing_(m_ * m_, -1), r_element_(m_ * m_, -1),
      shortcuts_(m_ * m_) {}

const std::optional<HypercubeEmbedding>& HcdAnalysis::cube(const EdgeSet& edges) {
  EdgeSet sorted = edges;
  std::sort(sorted.sources.begin(), sorted.sources.end());
  std::vector<std::uint64_t> key{sorted.target.key()};
  for (const auto& s : sorted.sources)
    key.push_back(s.key());
  auto it = cubes_.find(key);
  if (it == cubes_.end())
    it = cubes_.emplace(std::move(key), spans_hypercube(sorted)).first;
  return it->second;
}

EdgeSet HcdAnalysis::inflow(Index bottom, Index z, Index p) const {
  EdgeSet out{interval_.at(p), {}};
  for (Index e : interval_.in_edges(p)) {
    const Index x = interval_.edges()[e].source;
    if (interval_.leq(bottom, x) && !interval_.leq(z, x))
      out.sources.push_back(interval_.at(x));
  }
  return out;
}

bool HcdAnalysis::spans_cluster(const EdgeSet& edges) {
  bool ok = true;
  for_each_antichain(edges.sources, [&](const std::vector<std::size_t>& pick) {
    if (pick.size() >= 2 && !cube(subset(edges, pick)))
      ok = false;
    return ok;
  });
  return ok;
}

bool HcdAnalysis::is_upper_hcd(Index bottom, Index z) {
  if (!interval_.leq(bottom, z))
    throw NotInInterval("decomposition candidate below the bottom");
  auto& memo = hcd_[bottom * m_ + z];
  if (memo >= 0)
    return memo != 0;
  bool ok = is_diamond_complete(interval_, bottom, z);
  for (Index p = z; ok && p < m_; ++p)
    if (interval_.leq(z, p))
      ok = spans_cluster(inflow(bottom, z, p));
  memo = ok ? 1 : 0;
  return ok;
}

std::optional<Index> HcdAnalysis::join(Index z, Index x) const {
  // a minimum, if any, is the unique element of least length
  std::optional<Index> best;
  for (Index y = 0; y < m_; ++y) {
    if (!interval_.leq(z, y) || !interval_.leq(x, y))
      continue;
    if (!best) {
      best = y;
      continue;
    }
    if (!interval_.leq(*best, y))
      return std::nullopt;
  }
  return best;
}

bool HcdAnalysis::is_amazing(Index bottom, Index z) {
  auto& memo = amazing_[bottom * m_ + z];
  if (memo >= 0)
    return memo != 0;
  bool ok = is_upper_hcd(bottom, z);
  for (Index x = bottom; ok && x < m_; ++x) {
    if (!interval_.leq(bottom, x))
      continue;
    auto j = join(z, x);
    ok = j && is_upper_hcd(x, *j);
  }
  memo = ok ? 1 : 0;
  return ok;
}

const std::vector<Index>& HcdAnalysis::shortcuts(Index bottom, Index z) {
  auto& memo = shortcuts_[bottom * m_ + z];
  if (memo)
    return *memo;
  if (!interval_.leq(bottom, z))
    throw NotInInterval("decomposition candidate below the bottom");
  std::vector<Index> out;
  for (Index p = z; p < m_; ++p) {
    if (!interval_.leq(z, p))
      continue;
    const int d = interval_.dist(bottom, p);
    bool shortcut = true;
    // some geodesic bottom -> p passes through y iff d(b,y) + d(y,p) = d(b,p)
    for (Index y = z; shortcut && y < p; ++y) {
      if (!interval_.leq(z, y) || !interval_.leq(y, p))
        continue;
      shortcut = interval_.dist(bottom, y) + interval_.dist(y, p) != d;
    }
    if (shortcut)
      out.push_back(p);
  }
  memo = std::move(out);
  return *memo;
}

std::vector<Index> HcdAnalysis::shortcuts_by_cover_distance(Index bottom, Index z) const {
  std::vector<Index> out;
  for (Index p = z; p < m_; ++p) {
    if (!interval_.leq(z, p))
      continue;
    bool shortcut = true;
    for (Index y = z; shortcut && y < p; ++y)
      if (interval_.leq(z, y) && interval_.dist(y, p) == 1)
        shortcut = interval_.dist(bottom, p) < interval_.dist(bottom, y);
    if (shortcut)
      out.push_back(p);
  }
  return out;
}

QPoly HcdAnalysis::rtilde(Index x, Index y) const {
  if (!interval_.leq(x, y))
    return {};
  return rtilde_recurrence(interval_.at(x), interval_.at(y), cache_);
}

QPoly HcdAnalysis::rtilde_z(Index bottom, Index z) {
  QPoly sum;
  for (Index p : shortcuts(bottom, z))
    sum += rtilde(p, interval_.top()).shifted(interval_.dist(bottom, p));
  return sum;
}

bool HcdAnalysis::is_r_element(Index bottom, Index z) {
  auto& memo = r_element_[bottom * m_ + z];
  if (memo < 0)
    memo = rtilde_z(bottom, z) == rtilde(bottom, interval_.top()) ? 1 : 0;
  return memo != 0;
}

bool HcdAnalysis::is_amazing_r_element(Index bottom, Index z) {
  for (Index x = bottom; x < m_; ++x) {
    if (!interval_.leq(bottom, x))
      continue;
    auto j = join(z, x);
    if (!j || !is_r_element(x, *j))
      return false;
  }
  return true;
}

std::vector<StandardHcd> HcdAnalysis::standard_hcds(Index bottom) const {
  const Permutation& v = interval_.v();
  const int n = interval_.n();
  const Permutation vinv = v.inverse();
  struct Coset {
    StandardKind kind;
    bool (*member)(const Permutation& x, const Permutation& v, const Permutation& vinv, int n);
  };
  static constexpr Coset cosets[] = {
      {StandardKind::LeftDropLast,
       [](const Permutation& x, const Permutation&, const Permutation& vi, int n) {
         return x.inverse()(n) == vi(n);
       }},
      {StandardKind::LeftDropFirst,
       [](const Permutation& x, const Permutation&, const Permutation& vi, int) {
         return x.inverse()(1) == vi(1);
       }},
      {StandardKind::RightDropLast,
       [](const Permutation& x, const Permutation& vv, const Permutation&, int n) {
         return x(n) == vv(n);
       }},
      {StandardKind::RightDropFirst,
       [](const Permutation& x, const Permutation& vv, const Permutation&, int) {
         return x(1) == vv(1);
       }},
  };

  std::vector<StandardHcd> out;
  for (const auto& coset : cosets) {
    std::optional<Index> best;
    bool minimum = true;
    for (Index x = bottom; x < m_; ++x) {
      if (!interval_.leq(bottom, x) || !coset.member(interval_.at(x), v, vinv, n))
        continue;
      if (!best)
        best = x;
      else if (!interval_.leq(*best, x))
        minimum = false;
    }
    if (!best || !minimum)
      throw StandardHcdMissing("coset intersection of [" + interval_.at(bottom).str() +
                               "," + v.str() + "] has no minimum");
    auto same = std::find_if(out.begin(), out.end(), [&](const StandardHcd& s) {
      return s.z == interval_.at(*best);
    });
    if (same == out.end())
      out.push_back({interval_.at(*best), static_cast<std::uint8_t>(coset.kind)});
    else
      same->kinds |= static_cast<std::uint8_t>(coset.kind);
  }
  return out;
}

std::vector<Index> HcdAnalysis::enumerate_hcds(Index bottom, bool amazing_only) {
  std::vector<Index> out;
  for (Index z = bottom; z < m_; ++z) {
    if (!interval_.leq(bottom, z) || !is_upper_hcd(bottom, z))
      continue;
    if (amazing_only && !is_amazing(bottom, z))
      continue;
    out.push_back(z);
  }
  return out;
}

// --- free functions ---------------------------------------------------------

EdgeSet inflow(const Interval& interval, const Permutation& z, const Permutation& p) {
  const Index zi = interval.index_of(z), pi = interval.index_of(p);
  if (!interval.leq(zi, pi))
    throw NotInInterval(p.str() + " is not above " + z.str());
  return HcdAnalysis(interval).inflow(interval.bottom(), zi, pi);
}

bool is_upper_hcd(const Interval& interval, const Permutation& z) {
  return HcdAnalysis(interval).is_upper_hcd(interval.bottom(), interval.index_of(z));
}

std::vector<StandardHcd> standard_hcds(const Interval& interval) {
  return HcdAnalysis(interval).standard_hcds(interval.bottom());
}

std::optional<Permutation> join(const Interval& interval, const Permutation& z,
                                const Permutation& x) {
  auto j = HcdAnalysis(interval).join(interval.index_of(z), interval.index_of(x));
  if (!j)
    return std::nullopt;
  return interval.at(*j);
}

bool is_amazing(const Interval& interval, const Permutation& z) {
  return HcdAnalysis(interval).is_amazing(interval.bottom(), interval.index_of(z));
}

namespace {
std::vector<Permutation> to_elements(const Interval& interval, const std::vector<Index>& ix) {
  std::vector<Permutation> out;
  out.reserve(ix.size());
  for (Index a : ix)
    out.push_back(interval.at(a));
  return out;
}
} // namespace

std::vector<Permutation> shortcuts(const Interval& interval, const Permutation& z) {
  HcdAnalysis analysis(interval);
  return to_elements(interval, analysis.shortcuts(interval.bottom(), interval.index_of(z)));
}

std::vector<Permutation> shortcuts_by_cover_distance(const Interval& interval,
                                                     const Permutation& z) {
  HcdAnalysis analysis(interval);
  return to_elements(interval, analysis.shortcuts_by_cover_distance(interval.bottom(),
                                                                    interval.index_of(z)));
}

QPoly rtilde_z(const Interval& interval, const Permutation& z) {
  return HcdAnalysis(interval).rtilde_z(interval.bottom(), interval.index_of(z));
}

bool is_R_element(const Interval& interval, const Permutation& z) {
  return HcdAnalysis(interval).is_r_element(interval.bottom(), interval.index_of(z));
}

bool is_amazing_R_element(const Interval& interval, const Permutation& z) {
  HcdAnalysis analysis(interval);
  const Index zi = interval.index_of(z);
  return analysis.is_amazing(interval.bottom(), zi) &&
         analysis.is_amazing_r_element(interval.bottom(), zi);
}

std::vector<Permutation> enumerate_hcds(const Interval& interval, bool amazing_only) {
  HcdAnalysis analysis(interval);
  return to_elements(interval, analysis.enumerate_hcds(interval.bottom(), amazing_only));
}

std::string standard_kind_names(std::uint8_t kinds) {
  static constexpr std::pair<StandardKind, const char*> names[] = {
      {StandardKind::LeftDropLast, "left-drop-last"},
      {StandardKind::LeftDropFirst, "left-drop-first"},
      {StandardKind::RightDropLast, "right-drop-last"},
      {StandardKind::RightDropFirst, "right-drop-first"},
  };
  std::string out;
  for (const auto& [kind, name] : names) {
    if (kinds & static_cast<std::uint8_t>(kind)) {
      if (!out.empty())
        out += ',';
      out += name;
    }
  }
  return out;
}

} // namespace bruhat
