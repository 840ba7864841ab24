#include "bruhat/appendix_dh.hpp"

#include <algorithm>
#include <set>

namespace bruhat {

using nlohmann::json;

int RootMatrix::rank() const {
  if (rows.empty())
    return 0;
  std::vector<std::vector<BigInt>> a;
  for (const auto& r : rows)
    a.emplace_back(r.begin(), r.end());
  const std::size_t nrows = a.size(), ncols = a.front().size();
  // Bareiss elimination: every division below is exact
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t pivot = rank;
    while (pivot < nrows && a[pivot][col] == 0)
      ++pivot;
    if (pivot == nrows)
      continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < nrows; ++r) {
      for (std::size_t c = col + 1; c < ncols; ++c)
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

RootMatrix coatom_roots(const Interval& interval) {
  RootMatrix out;
  for (const auto& t : coatom_reflections(interval, interval.bottom(), interval.top()))
    out.rows.push_back(t.root(interval.n()));
  return out;
}

bool is_cosimple(const Interval& interval) {
  const auto roots = coatom_roots(interval);
  return roots.rank() == static_cast<int>(roots.rows.size());
}

namespace {

template <class Visit>
void for_each_incomparable_subset(const Interval& interval, const std::vector<Index>& items,
                                  Visit&& visit) {
  std::vector<Index> chosen;
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    visit(chosen);
    for (std::size_t k = start; k < items.size(); ++k) {
      bool ok = std::all_of(chosen.begin(), chosen.end(), [&](Index c) {
        return !interval.leq(c, items[k]) && !interval.leq(items[k], c);
      });
      if (!ok)
        continue;
      chosen.push_back(items[k]);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0);
}

} // namespace

std::vector<AntichainHypercube> antichain_hypercubes(HcdAnalysis& analysis, Index bottom,
                                                     Index z) {
  const Interval& interval = analysis.interval();
  const Permutation& base = interval.at(bottom);
  std::vector<AntichainHypercube> out;
  for (Index p = z; p < interval.size(); ++p) {
    if (!interval.leq(z, p))
      continue;
    std::vector<Index> sources;
    for (Index e : interval.in_edges(p)) {
      const Index s = interval.edges()[e].source;
      if (interval.leq(bottom, s))
        sources.push_back(s);
    }
    for_each_incomparable_subset(interval, sources, [&](const std::vector<Index>& pick) {
      if (pick.empty()) {
        if (p == bottom)
          out.push_back({HypercubeEmbedding{{interval.at(p)}, 0}, p, 0});
        return;
      }
      EdgeSet edges{interval.at(p), {}};
      for (Index s : pick)
        edges.sources.push_back(interval.at(s));
      const auto& cube = analysis.cube(edges);
      if (!cube || cube->bottom() != base)
        return;
      // every vertex lies in [bottom, p]; only the top may meet [z,v]
      for (std::size_t k = 0; k + 1 < cube->assignment.size(); ++k)
        if (bruhat_leq(interval.at(z), cube->assignment[k]))
          return;
      out.push_back({*cube, p, cube->rank});
    });
  }
  return out;
}

std::vector<AntichainHypercube> antichain_hypercubes(const Interval& interval,
                                                     const Permutation& z) {
  HcdAnalysis analysis(interval);
  return antichain_hypercubes(analysis, interval.bottom(), interval.index_of(z));
}

DegreeMultiset dh_multiset(HcdAnalysis& analysis, Index bottom, Index z, Index z2) {
  const Interval& interval = analysis.interval();
  DegreeMultiset out;
  for (const auto& lower : antichain_hypercubes(analysis, bottom, z)) {
    auto j = analysis.join(z2, lower.top);
    if (!j)
      throw JoinMissing("no join of " + interval.at(z2).str() + " and " +
                        interval.at(lower.top).str());
    for (const auto& upper : antichain_hypercubes(analysis, lower.top, *j))
      out.add(lower.rank + upper.rank, interval.at(upper.top));
  }
  return out;
}

DegreeMultiset dh_multiset(const Interval& interval, const Permutation& z,
                           const Permutation& z2) {
  HcdAnalysis analysis(interval);
  return dh_multiset(analysis, interval.bottom(), interval.index_of(z), interval.index_of(z2));
}

CheckRecord verify_dh_symmetry(HcdAnalysis& analysis, Index z, Index z2,
                               Status on_violation) {
  const Interval& interval = analysis.interval();
  auto record = make_record("cosimple-dh", interval);
  record.z = interval.at(z);
  record.z2 = interval.at(z2);
  record.detail["spanning"] = "top-spanned, bottom = u";
  if (!is_cosimple(interval)) {
    record.status = Status::Skip;
    record.detail["reason"] = "not co-simple";
    return record;
  }
  const auto forward = dh_multiset(analysis, interval.bottom(), z, z2);
  const auto backward = dh_multiset(analysis, interval.bottom(), z2, z);
  if (forward != backward) {
    record.status = on_violation;
    record.detail["dh"] = forward.str();
    record.detail["dh_reversed"] = backward.str();
  }
  return record;
}

CheckRecord verify_dh_symmetry(const Interval& interval, const Permutation& z,
                               const Permutation& z2) {
  HcdAnalysis analysis(interval);
  return verify_dh_symmetry(analysis, interval.index_of(z), interval.index_of(z2));
}

const char* to_string(LemmaReading reading) {
  switch (reading) {
  case LemmaReading::Coatoms:
    return "coatoms";
  case LemmaReading::Edges:
    return "edges";
  case LemmaReading::Span:
    return "span";
  }
  return "?";
}

std::vector<PrecedenceConstraint> lemma_constraints(const Interval& interval, Index z,
                                                    LemmaReading reading) {
  std::set<Reflection> early, late;
  if (reading == LemmaReading::Coatoms) {
    const auto whole = coatom_reflections(interval, interval.bottom(), interval.top());
    const auto upper = coatom_reflections(interval, z, interval.top());
    late.insert(upper.begin(), upper.end());
    for (const auto& t : whole)
      if (!late.count(t))
        early.insert(t);
  } else if (reading == LemmaReading::Span) {
    RootMatrix base;
    for (const auto& t : coatom_reflections(interval, z, interval.top()))
      base.rows.push_back(t.root(interval.n()));
    const int rank = base.rank();
    for (const auto& t : all_reflections(interval.n())) {
      RootMatrix extended = base;
      extended.rows.push_back(t.root(interval.n()));
      (extended.rank() == rank ? late : early).insert(t);
    }
  } else {
    for (const auto& e : interval.edges()) {
      const bool src_in = interval.leq(z, e.source), dst_in = interval.leq(z, e.target);
      if (src_in && dst_in)
        late.insert(e.label);
      else if (!src_in && !dst_in)
        early.insert(e.label);
    }
  }
  std::vector<PrecedenceConstraint> out;
  for (const auto& a : early)
    for (const auto& b : late)
      out.emplace_back(a, b);
  return out;
}

std::map<Index, QPoly> path_count_convolution(HcdAnalysis& analysis,
                                              const PathCountTable& table) {
  const Interval& interval = analysis.interval();
  std::map<Index, QPoly> out;
  for (const auto& [p, unused] : table) {
    QPoly sum;
    for (const auto& [x, counts] : table)
      if (interval.leq(x, p))
        sum += counts * analysis.rtilde(x, p);
    out.emplace(p, std::move(sum));
  }
  return out;
}

CheckRecord verify_lemma_incpaths(HcdAnalysis& analysis, Index z, LemmaReading reading,
                                  std::size_t order_limit) {
  const Interval& interval = analysis.interval();
  auto record = make_record("lemma-paths", interval);
  record.z = interval.at(z);
  record.detail["reading"] = to_string(reading);
  if (!is_cosimple(interval) || !is_diamond_complete(interval, interval.bottom(), z)) {
    record.status = Status::Skip;
    record.detail["reason"] = "precondition";
    return record;
  }
  const auto constraints = lemma_constraints(interval, z, reading);
  const auto orders = constrained_orders(interval.n(), constraints, order_limit);
  record.detail["constraints"] = constraints.size();
  record.detail["orders"] = orders.size();
  if (orders.empty()) {
    record.status = Status::Skip;
    record.detail["reason"] = "no reflection order satisfies the constraints";
    return record;
  }

  const PathCountTable reference = increasing_path_counts(interval, z, orders.front());
  bool identical = true, identity_holds = true;
  for (const auto& order : orders) {
    const auto table = increasing_path_counts(interval, z, order);
    if (table != reference && identical) {
      identical = false;
      record.detail["witness_order"] = order.str();
    }
    for (const auto& [p, lhs] : path_count_convolution(analysis, table))
      if (lhs != analysis.rtilde(interval.bottom(), p))
        identity_holds = false;
  }
  record.detail["tables_identical"] = identical;
  record.detail["convolution_identity"] = identity_holds;
  if (!identical)
    record.status = reading == LemmaReading::Coatoms ? Status::Fail : Status::Finding;
  return record;
}

CheckRecord verify_lemma_incpaths(const Interval& interval, const Permutation& z,
                                  LemmaReading reading, std::size_t order_limit) {
  HcdAnalysis analysis(interval);
  return verify_lemma_incpaths(analysis, interval.index_of(z), reading, order_limit);
}

CheckRecord verify_hw_projection(HcdAnalysis& analysis, Index z) {
  const Interval& interval = analysis.interval();
  auto record = make_record("hw-bijection", interval);
  record.z = interval.at(z);
  record.detail["spanning"] = "top-spanned, bottom = u";
  const auto cubes = antichain_hypercubes(analysis, interval.bottom(), z);
  std::vector<Index> image;
  for (const auto& c : cubes)
    image.push_back(c.top);
  std::sort(image.begin(), image.end());
  const bool injective = std::adjacent_find(image.begin(), image.end()) == image.end();
  image.erase(std::unique(image.begin(), image.end()), image.end());
  const bool onto = image == analysis.shortcuts(interval.bottom(), z);
  record.detail["injective"] = injective;
  record.detail["image_is_shortcuts"] = onto;
  bool ranks_match = true;
  for (const auto& c : cubes)
    ranks_match = ranks_match && c.rank == interval.dist(interval.bottom(), c.top);
  record.detail["rank_equals_distance"] = ranks_match;
  if (!injective || !onto)
    record.status = Status::Finding;
  return record;
}

CheckRecord verify_hw_projection(const Interval& interval, const Permutation& z) {
  HcdAnalysis analysis(interval);
  return verify_hw_projection(analysis, interval.index_of(z));
}

} // namespace bruhat
