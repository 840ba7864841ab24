#pragma once

// Brute-force reference implementations used only by the tests. They share
// nothing with the library beyond the Permutation value type.

#include "bruhat/permutation.hpp"
#include "bruhat/qpoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using bruhat::Permutation;
using bruhat::QPoly;

inline int inversions(const std::vector<int>& w) {
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      count += w[i] > w[j];
  return count;
}

inline std::vector<std::vector<int>> all_windows(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i)
    w[i] = i + 1;
  std::vector<std::vector<int>> out;
  do
    out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// A reduced word for w by bubble sort: repeatedly swap an adjacent descent.
inline std::vector<int> reduced_word(std::vector<int> w) {
  std::vector<int> word;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        word.push_back(static_cast<int>(i) + 1);
        swapped = true;
      }
  }
  // bubble sort peeled letters off the right: w = s_{k} ... s_{1} reversed
  std::reverse(word.begin(), word.end());
  return word;
}

inline std::vector<int> apply_word(int n, const std::vector<int>& word) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i)
    w[i] = i + 1;
  for (int s : word)
    std::swap(w[s - 1], w[s]);
  return w;
}

/// Subword property: x <= y iff x is a product of a subword of a reduced
/// word of y.
inline std::set<std::vector<int>> lower_set_by_subwords(const std::vector<int>& y) {
  const auto word = reduced_word(y);
  const int n = static_cast<int>(y.size());
  std::set<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << word.size()); ++mask) {
    std::vector<int> sub;
    for (std::size_t k = 0; k < word.size(); ++k)
      if (mask >> k & 1u)
        sub.push_back(word[k]);
    out.insert(apply_word(n, sub));
  }
  return out;
}

/// Bruhat-graph arrow x -> y: y differs from x by one transposition of
/// positions and has more inversions.
inline bool arrow(const std::vector<int>& x, const std::vector<int>& y) {
  int diff = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    diff += x[i] != y[i];
  return diff == 2 && inversions(y) > inversions(x);
}

inline std::pair<int, int> arrow_label(const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<int> pos;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i])
      pos.push_back(static_cast<int>(i) + 1);
  return {pos[0], pos[1]};
}

/// Explicit finite poset with Bruhat-graph arrows, rebuilt from scratch.
struct Poset {
  std::vector<std::vector<int>> elements;
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> out; // arrow targets
  std::vector<std::vector<char>> order;

  Poset(const std::vector<int>& u, const std::vector<int>& v) {
    const auto below_v = lower_set_by_subwords(v);
    for (const auto& w : below_v)
      if (lower_set_by_subwords(w).count(u))
        elements.push_back(w);
    for (std::size_t a = 0; a < elements.size(); ++a)
      index[elements[a]] = static_cast<int>(a);
    out.resize(elements.size());
    for (std::size_t a = 0; a < elements.size(); ++a)
      for (std::size_t b = 0; b < elements.size(); ++b)
        if (arrow(elements[a], elements[b]))
          out[a].push_back(static_cast<int>(b));
    order.assign(elements.size(), std::vector<char>(elements.size(), 0));
    for (std::size_t b = 0; b < elements.size(); ++b) {
      const auto below = lower_set_by_subwords(elements[b]);
      for (std::size_t a = 0; a < elements.size(); ++a)
        order[a][b] = below.count(elements[a]) > 0;
    }
  }

  int at(const std::vector<int>& w) const { return index.at(w); }
  int size() const { return static_cast<int>(elements.size()); }

  bool leq(int a, int b) const { return order[a][b] != 0; }

  /// Every directed path from a to b, as vertex sequences.
  std::vector<std::vector<int>> paths(int a, int b) const {
    std::vector<std::vector<int>> found;
    std::vector<int> trail{a};
    std::function<void(int)> walk = [&](int x) {
      if (x == b) {
        found.push_back(trail);
        return;
      }
      for (int y : out[x]) {
        trail.push_back(y);
        walk(y);
        trail.pop_back();
      }
    };
    walk(a);
    return found;
  }

  std::optional<int> distance(int a, int b) const {
    std::optional<int> best;
    for (const auto& p : paths(a, b))
      if (!best || static_cast<int>(p.size()) - 1 < *best)
        best = static_cast<int>(p.size()) - 1;
    return best;
  }
};

/// Sum over all increasing paths a -> b of q^length under a total order on
/// transpositions given as a rank function.
inline QPoly increasing_paths(const Poset& poset, int a, int b,
                              const std::function<int(std::pair<int, int>)>& rank) {
  QPoly sum;
  for (const auto& path : poset.paths(a, b)) {
    bool increasing = true;
    for (std::size_t k = 2; k < path.size() && increasing; ++k)
      increasing = rank(arrow_label(poset.elements[path[k - 2]], poset.elements[path[k - 1]])) <
                   rank(arrow_label(poset.elements[path[k - 1]], poset.elements[path[k]]));
    if (increasing)
      sum += QPoly::monomial(static_cast<int>(path.size()) - 1);
  }
  return sum;
}

/// Shortcuts from the geodesic definition: p >= z such that every shortest
/// path bottom -> p meets [z, top] only at p.
inline std::set<std::vector<int>> shortcuts(const Poset& poset, int bottom, int z) {
  std::set<std::vector<int>> out;
  for (int p = 0; p < poset.size(); ++p) {
    if (!poset.leq(z, p) || !poset.leq(bottom, p))
      continue;
    const auto d = poset.distance(bottom, p);
    bool ok = true;
    for (const auto& path : poset.paths(bottom, p)) {
      if (static_cast<int>(path.size()) - 1 != *d)
        continue;
      for (std::size_t k = 0; k + 1 < path.size(); ++k)
        ok = ok && !poset.leq(z, path[k]);
    }
    if (ok)
      out.insert(poset.elements[p]);
  }
  return out;
}

/// Minimum of [z, top] ∩ [x, top] by scanning, if unique.
inline std::optional<int> join(const Poset& poset, int z, int x) {
  std::vector<int> common;
  for (int p = 0; p < poset.size(); ++p)
    if (poset.leq(z, p) && poset.leq(x, p))
      common.push_back(p);
  for (int m : common)
    if (std::all_of(common.begin(), common.end(), [&](int p) { return poset.leq(m, p); }))
      return m;
  return std::nullopt;
}

/// Number of injective maps from subsets of {0..r-1} into S_n with the
/// given top and coatoms, sending every Boolean-algebra cover to an arrow.
inline int count_cube_assignments(const std::vector<int>& top,
                                  const std::vector<std::vector<int>>& sources) {
  const int r = static_cast<int>(sources.size());
  const int full = (1 << r) - 1;
  const auto universe = all_windows(static_cast<int>(top.size()));
  std::vector<std::vector<int>> theta(static_cast<std::size_t>(full) + 1);
  theta[full] = top;
  std::vector<int> free_masks;
  for (int mask = 0; mask < full; ++mask) {
    const int missing = full & ~mask;
    if ((missing & (missing - 1)) == 0) {
      int i = 0;
      while (!(missing >> i & 1))
        ++i;
      theta[mask] = sources[i];
    } else {
      free_masks.push_back(mask);
    }
  }
  std::sort(free_masks.begin(), free_masks.end(), [](int a, int b) {
    return __builtin_popcount(a) > __builtin_popcount(b);
  });
  for (int mask = 0; mask <= full; ++mask)
    if (std::find(free_masks.begin(), free_masks.end(), mask) == free_masks.end())
      for (int i = 0; i < r; ++i)
        if (!(mask >> i & 1) && !arrow(theta[mask], theta[mask | 1 << i]))
          return 0;
  int count = 0;
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == free_masks.size()) {
      std::set<std::vector<int>> image(theta.begin(), theta.end());
      if (static_cast<int>(image.size()) == full + 1)
        ++count;
      return;
    }
    const int mask = free_masks[k];
    for (const auto& w : universe) {
      bool ok = true;
      for (int i = 0; i < r && ok; ++i)
        if (!(mask >> i & 1))
          ok = arrow(w, theta[mask | 1 << i]);
      if (!ok)
        continue;
      theta[mask] = w;
      fill(k + 1);
    }
  };
  fill(0);
  return count;
}

} // namespace oracle
