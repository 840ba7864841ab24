#include "bruhat/rpoly.hpp"

#include <algorithm>
#include <optional>

namespace bruhat {

ReflectionOrder::ReflectionOrder(int n, std::vector<Reflection> sequence)
    : n_(n), sequence_(std::move(sequence)) {
  const int total = n * (n - 1) / 2;
  if (static_cast<int>(sequence_.size()) != total)
    throw InvalidOrder("order must list all " + std::to_string(total) + " reflections");
  position_.assign(static_cast<std::size_t>(total), -1);
  for (int k = 0; k < total; ++k) {
    const auto& t = sequence_[k];
    if (t.j > n)
      throw InvalidOrder("reflection " + t.str() + " outside rank");
    int& slot = position_[reflection_index(t, n)];
    if (slot != -1)
      throw InvalidOrder("reflection " + t.str() + " listed twice");
    slot = k;
  }
}

std::string ReflectionOrder::str() const {
  std::string out;
  for (const auto& t : sequence_) {
    if (!out.empty())
      out += '<';
    out += t.str();
  }
  return out;
}

namespace {

// Zero off the interval; the recursion steps outside it.
QPoly rtilde_or_zero(const Permutation& u, const Permutation& v, RtildeCache& cache) {
  if (u == v)
    return QPoly::constant(1);
  if (!bruhat_leq(u, v))
    return {};
  if (auto hit = cache.lookup(u, v))
    return *hit;

  int s = 0;
  for (int i = v.n() - 1; i >= 1; --i) {
    if (v(i) > v(i + 1)) {
      s = i;
      break;
    }
  }
  // v != identity here since u < v
  const Permutation vs = v.times_simple(s);
  const Permutation us = u.times_simple(s);
  QPoly result = rtilde_or_zero(us, vs, cache);
  if (u(s) < u(s + 1))
    result += rtilde_or_zero(u, vs, cache).shifted(1);
  cache.store(u, v, result);
  return result;
}

} // namespace

QPoly rtilde_recurrence(const Permutation& u, const Permutation& v,
                        RtildeCache& cache) {
  if (u.n() != v.n())
    throw RankMismatch("permutations of different sizes");
  if (!bruhat_leq(u, v))
    throw NotComparable(u.str() + " is not below " + v.str());
  return rtilde_or_zero(u, v, cache);
}

bool is_reflection_order(const ReflectionOrder& order) {
  const int n = order.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        const int a = order.position({i, j});
        const int b = order.position({i, k});
        const int c = order.position({j, k});
        if (!((a < b && b < c) || (c < b && b < a)))
          return false;
      }
  return true;
}

ReflectionOrder reflection_order_from_word(int n, const std::vector<int>& word) {
  const int total = n * (n - 1) / 2;
  if (static_cast<int>(word.size()) != total)
    throw InvalidOrder("word length differs from length of w0");
  Permutation w = Permutation::identity(n);
  std::vector<Reflection> sequence;
  for (int s : word) {
    if (s < 1 || s >= n)
      throw InvalidOrder("simple generator index out of range");
    if (w(s) > w(s + 1))
      throw InvalidOrder("word is not reduced");
    // w s_i w^{-1} swaps the values w(i), w(i+1)
    sequence.emplace_back(w(s), w(s + 1));
    w = w.times_simple(s);
  }
  // a reduced word of length N always ends at w0
  return ReflectionOrder(n, std::move(sequence));
}

namespace {

void require_valid(const Interval& interval, const ReflectionOrder& order) {
  if (order.n() != interval.n())
    throw InvalidOrder("order rank differs from interval rank");
  if (!is_reflection_order(order))
    throw InvalidOrder("not a reflection order: " + order.str());
}

} // namespace

QPoly rtilde_dyer(const Interval& interval, const ReflectionOrder& order) {
  require_valid(interval, order);
  const Index m = interval.size();
  const int slots = static_cast<int>(order.sequence().size()) + 1;
  // paths_from[x][s]: increasing paths x -> v whose first label has
  // position >= s
  std::vector<std::optional<QPoly>> memo(m * static_cast<std::size_t>(slots));
  const Index top = interval.top();

  auto count = [&](auto&& self, Index x, int min_position) -> const QPoly& {
    auto& slot = memo[x * slots + min_position];
    if (slot)
      return *slot;
    QPoly total;
    if (x == top)
      total = QPoly::constant(1);
    for (Index e : interval.out_edges(x)) {
      const Edge& edge = interval.edges()[e];
      const int pos = order.position(edge.label);
      if (pos < min_position)
        continue;
      total += self(self, edge.target, pos + 1).shifted(1);
    }
    slot = std::move(total);
    return *slot;
  };
  return count(count, interval.bottom(), 0);
}

PathCountTable increasing_path_counts(const Interval& interval, Index z,
                                      const ReflectionOrder& order) {
  require_valid(interval, order);
  const Index m = interval.size();
  const int slots = static_cast<int>(order.sequence().size()) + 1;
  // partial[x][s]: increasing paths u -> x avoiding [z,v] before x whose last
  // label has position s-1 (s = 0 for the empty path)
  std::vector<QPoly> partial(m * static_cast<std::size_t>(slots));
  partial[interval.bottom() * slots] = QPoly::constant(1);

  PathCountTable table;
  for (Index x = 0; x < m; ++x) {
    if (interval.leq(z, x)) {
      QPoly sum;
      for (int s = 0; s < slots; ++s)
        sum += partial[x * slots + s];
      table.emplace(x, std::move(sum));
      continue;
    }
    for (int s = 0; s < slots; ++s) {
      const QPoly& here = partial[x * slots + s];
      if (here.is_zero())
        continue;
      for (Index e : interval.out_edges(x)) {
        const Edge& edge = interval.edges()[e];
        const int pos = order.position(edge.label);
        if (pos + 1 <= s)
          continue;
        partial[edge.target * slots + pos + 1] += here.shifted(1);
      }
    }
  }
  return table;
}

PathCountTable increasing_path_counts(const Interval& interval,
                                      const Permutation& z,
                                      const ReflectionOrder& order) {
  return increasing_path_counts(interval, interval.index_of(z), order);
}

namespace {

template <class Visit>
void walk_reduced_words(int n, const std::vector<PrecedenceConstraint>& constraints,
                        std::size_t limit, Visit&& visit) {
  const int total = n * (n - 1) / 2;
  // blockers[t]: reflections that must already be placed before t
  std::vector<std::vector<int>> blockers(static_cast<std::size_t>(total));
  for (const auto& [a, b] : constraints) {
    if (a.j > n || b.j > n)
      throw InvalidOrder("constraint outside rank");
    blockers[reflection_index(b, n)].push_back(reflection_index(a, n));
  }

  std::vector<char> placed(static_cast<std::size_t>(total), 0);
  std::vector<int> word;
  std::vector<Reflection> sequence;
  std::size_t emitted = 0;

  auto dfs = [&](auto&& self, const Permutation& w) -> bool {
    if (static_cast<int>(word.size()) == total) {
      visit(word, sequence);
      return limit == 0 || ++emitted < limit;
    }
    for (int s = 1; s < n; ++s) {
      if (w(s) > w(s + 1))
        continue;
      const Reflection t(w(s), w(s + 1));
      const int ti = reflection_index(t, n);
      const auto& need = blockers[ti];
      if (!std::all_of(need.begin(), need.end(), [&](int a) { return placed[a] != 0; }))
        continue;
      placed[ti] = 1;
      word.push_back(s);
      sequence.push_back(t);
      const bool more = self(self, w.times_simple(s));
      placed[ti] = 0;
      word.pop_back();
      sequence.pop_back();
      if (!more)
        return false;
    }
    return true;
  };
  dfs(dfs, Permutation::identity(n));
}

} // namespace

std::vector<ReflectionOrder>
constrained_orders(int n, const std::vector<PrecedenceConstraint>& must_precede,
                   std::size_t limit) {
  std::vector<ReflectionOrder> out;
  if (n < 2) {
    out.emplace_back(n, std::vector<Reflection>{});
    return out;
  }
  walk_reduced_words(n, must_precede, limit,
                     [&](const std::vector<int>&, const std::vector<Reflection>& seq) {
                       out.emplace_back(n, seq);
                     });
  return out;
}

std::vector<std::vector<int>> reduced_words_of_longest(int n, std::size_t limit) {
  std::vector<std::vector<int>> out;
  if (n < 2) {
    out.emplace_back();
    return out;
  }
  walk_reduced_words(n, {}, limit,
                     [&](const std::vector<int>& word, const std::vector<Reflection>&) {
                       out.push_back(word);
                     });
  return out;
}

} // namespace bruhat
