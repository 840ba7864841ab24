#include "bruhat/interval.hpp"

#include <algorithm>
#include <deque>

namespace bruhat {

namespace {

bool element_order(const Permutation& a, const Permutation& b) {
  const int la = a.length(), lb = b.length();
  if (la != lb)
    return la < lb;
  return a < b;
}

} // namespace

Interval Interval::build(const Permutation& u, const Permutation& v) {
  if (u.n() != v.n())
    throw RankMismatch("interval endpoints have different ranks");
  if (!bruhat_leq(u, v))
    throw NotComparable(u.str() + " is not below " + v.str());

  // Every element of [u,v] is reachable from u along Bruhat-graph arrows.
  Interval out;
  out.n_ = u.n();
  const auto reflections = all_reflections(u.n());
  std::unordered_map<Permutation, Index> seen{{u, 0}};
  std::vector<Permutation> found{u};
  for (Index head = 0; head < found.size(); ++head) {
    const Permutation x = found[head];
    for (const auto& t : reflections) {
      if (x(t.i) > x(t.j))
        continue;
      Permutation y = x.times(t);
      if (seen.count(y) || !bruhat_leq(y, v))
        continue;
      seen.emplace(y, found.size());
      found.push_back(y);
    }
  }
  std::sort(found.begin(), found.end(), element_order);
  out.elements_ = std::move(found);
  out.populate();
  return out;
}

Interval Interval::upper(Index x) const {
  Interval out;
  out.n_ = n_;
  for (Index a = 0; a < size(); ++a)
    if (leq(x, a))
      out.elements_.push_back(elements_[a]);
  out.populate();
  return out;
}

void Interval::populate() {
  const Index m = elements_.size();
  lengths_.resize(m);
  index_.clear();
  index_.reserve(m);
  for (Index a = 0; a < m; ++a) {
    lengths_[a] = elements_[a].length();
    index_.emplace(elements_[a], a);
  }

  leq_.assign(m * m, 0);
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b)
      if (a == b || (lengths_[a] < lengths_[b] && bruhat_leq(elements_[a], elements_[b])))
        leq_[a * m + b] = 1;

  edges_.clear();
  in_.assign(m, {});
  out_.assign(m, {});
  const auto reflections = all_reflections(n_);
  for (Index a = 0; a < m; ++a) {
    const Permutation& x = elements_[a];
    for (const auto& t : reflections) {
      if (x(t.i) > x(t.j))
        continue;
      auto it = index_.find(x.times(t));
      if (it == index_.end())
        continue;
      out_[a].push_back(edges_.size());
      in_[it->second].push_back(edges_.size());
      edges_.push_back({a, it->second, t});
    }
  }

  dist_.assign(m * m, kUnreachable);
  std::deque<Index> queue;
  for (Index s = 0; s < m; ++s) {
    int* row = &dist_[s * m];
    row[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      Index x = queue.front();
      queue.pop_front();
      for (Index e : out_[x]) {
        Index y = edges_[e].target;
        if (row[y] == kUnreachable) {
          row[y] = row[x] + 1;
          queue.push_back(y);
        }
      }
    }
  }
}

std::optional<Index> Interval::find(const Permutation& x) const {
  auto it = index_.find(x);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

Index Interval::index_of(const Permutation& x) const {
  auto found = find(x);
  if (!found)
    throw NotInInterval(x.str() + " is not in [" + u().str() + "," + v().str() + "]");
  return *found;
}

std::optional<Index> Interval::edge_between(Index source, Index target) const {
  for (Index e : out_[source])
    if (edges_[e].target == target)
      return e;
  return std::nullopt;
}

int distance(const Interval& interval, const Permutation& x, const Permutation& y) {
  return interval.dist(interval.index_of(x), interval.index_of(y));
}

std::vector<Path> geodesics(const Interval& interval, const Permutation& x,
                            const Permutation& y) {
  const Index from = interval.index_of(x);
  const Index to = interval.index_of(y);
  std::vector<Path> out;
  const int budget = interval.dist(from, to);
  if (budget == kUnreachable)
    return out;

  Path current;
  current.vertices.push_back(x);
  auto walk = [&](auto&& self, Index at, int remaining) -> void {
    if (remaining == 0) {
      if (at == to)
        out.push_back(current);
      return;
    }
    for (Index e : interval.out_edges(at)) {
      const Edge& edge = interval.edges()[e];
      if (interval.dist(edge.target, to) != remaining - 1)
        continue;
      current.vertices.push_back(interval.at(edge.target));
      current.labels.push_back(edge.label);
      self(self, edge.target, remaining - 1);
      current.vertices.pop_back();
      current.labels.pop_back();
    }
  };
  walk(walk, from, budget);
  return out;
}

std::vector<Reflection> coatom_reflections(const Interval& interval, Index x,
                                           Index y) {
  std::vector<Reflection> out;
  for (Index e : interval.in_edges(y)) {
    const Edge& edge = interval.edges()[e];
    if (interval.length(edge.source) + 1 == interval.length(y) &&
        interval.leq(x, edge.source))
      out.push_back(edge.label);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Reflection> coatom_reflections(const Interval& interval,
                                           const Permutation& x,
                                           const Permutation& y) {
  return coatom_reflections(interval, interval.index_of(x), interval.index_of(y));
}

bool is_diamond_complete(const Interval& interval, Index bottom, Index z) {
  const Index m = interval.size();
  std::vector<int> hits(m);
  for (Index x = 0; x < m; ++x) {
    if (!interval.leq(bottom, x) || interval.leq(z, x))
      continue;
    std::fill(hits.begin(), hits.end(), 0);
    for (Index e1 : interval.out_edges(x)) {
      Index a = interval.edges()[e1].target;
      if (!interval.leq(z, a))
        continue;
      for (Index e2 : interval.out_edges(a))
        if (++hits[interval.edges()[e2].target] >= 2)
          return false;
    }
  }
  return true;
}

bool is_diamond_complete(const Interval& interval, const Permutation& z) {
  return is_diamond_complete(interval, interval.bottom(), interval.index_of(z));
}

DualInterval dual_interval(const Interval& interval) {
  const Permutation w0 = longest_element(interval.n());
  DualInterval out{Interval::build(compose(interval.v(), w0), compose(interval.u(), w0)), {}};
  out.image.reserve(interval.size());
  for (const auto& x : interval.elements())
    out.image.push_back(out.interval.index_of(compose(x, w0)));
  return out;
}

} // namespace bruhat
