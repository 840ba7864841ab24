#pragma once

// Bruhat intervals [u,v] as explicit posets carrying the restriction of the
// Bruhat graph and its directed distances.

#include "bruhat/permutation.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace bruhat {

class NotComparable : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class NotInInterval : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

using Index = std::size_t;

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Bruhat-graph arrow source -> target = source * label.
struct Edge {
  Index source;
  Index target;
  Reflection label;
};

struct Path {
  std::vector<Permutation> vertices;
  std::vector<Reflection> labels;

  int size() const { return static_cast<int>(labels.size()); }
};

/// Immutable after build(). Elements are ordered by (length, window), so
/// index 0 is u and the last index is v.
class Interval {
public:
  static Interval build(const Permutation& u, const Permutation& v);

  int n() const { return n_; }
  const Permutation& u() const { return elements_.front(); }
  const Permutation& v() const { return elements_.back(); }
  Index size() const { return elements_.size(); }
  Index bottom() const { return 0; }
  Index top() const { return elements_.size() - 1; }

  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& at(Index a) const { return elements_[a]; }
  int length(Index a) const { return lengths_[a]; }

  std::optional<Index> find(const Permutation& x) const;
  /// Throws NotInInterval.
  Index index_of(const Permutation& x) const;
  bool contains(const Permutation& x) const { return find(x).has_value(); }

  bool leq(Index a, Index b) const { return leq_[a * size() + b] != 0; }
  /// Directed Bruhat-graph distance, kUnreachable when a is not below b.
  int dist(Index a, Index b) const { return dist_[a * size() + b]; }

  const std::vector<Edge>& edges() const { return edges_; }
  /// Positions in edges() of arrows into / out of an element.
  std::span<const Index> in_edges(Index a) const { return in_[a]; }
  std::span<const Index> out_edges(Index a) const { return out_[a]; }
  /// Edge position for source -> target, if that arrow exists.
  std::optional<Index> edge_between(Index source, Index target) const;

  /// [x, v] as a standalone interval.
  Interval upper(Index x) const;

private:
  Interval() = default;
  void populate();

  int n_ = 0;
  std::vector<Permutation> elements_;
  std::vector<int> lengths_;
  std::unordered_map<Permutation, Index> index_;
  std::vector<std::uint8_t> leq_;
  std::vector<int> dist_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Index>> in_;
  std::vector<std::vector<Index>> out_;
};

/// Minimum number of edges on a directed path x -> ... -> y.
int distance(const Interval& interval, const Permutation& x, const Permutation& y);

/// Every directed path of length distance(x, y) from x to y.
std::vector<Path> geodesics(const Interval& interval, const Permutation& x,
                            const Permutation& y);

/// Labels of the arrows c -> y over coatoms c of the subinterval [x, y],
/// sorted.
std::vector<Reflection> coatom_reflections(const Interval& interval,
                                           const Permutation& x,
                                           const Permutation& y);
std::vector<Reflection> coatom_reflections(const Interval& interval, Index x,
                                           Index y);

/// Diamond completeness of [z, v] relative to [bottom, v]; the two-argument
/// form uses bottom = u.
bool is_diamond_complete(const Interval& interval, Index bottom, Index z);
bool is_diamond_complete(const Interval& interval, const Permutation& z);

struct DualInterval {
  Interval interval;           // [v w0, u w0]
  std::vector<Index> image;    // element a of the source maps to image[a]
};

DualInterval dual_interval(const Interval& interval);

} // namespace bruhat
