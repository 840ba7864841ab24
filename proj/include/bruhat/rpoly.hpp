#pragma once

// R-tilde polynomials: the descent recurrence, and Dyer's increasing-path
// count with respect to a reflection order.

#include "bruhat/interval.hpp"
#include "bruhat/qpoly.hpp"
#include "bruhat/rtilde_cache.hpp"

#include <map>
#include <utility>
#include <vector>

namespace bruhat {

class InvalidOrder : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Total order on the reflections of S_n. Construction only checks that every
/// reflection appears once; is_reflection_order() checks the axiom.
class ReflectionOrder {
public:
  ReflectionOrder(int n, std::vector<Reflection> sequence);

  int n() const { return n_; }
  const std::vector<Reflection>& sequence() const { return sequence_; }
  /// 0-based rank of t in the order.
  int position(const Reflection& t) const { return position_[reflection_index(t, n_)]; }
  bool precedes(const Reflection& a, const Reflection& b) const {
    return position(a) < position(b);
  }
  std::string str() const;

  friend bool operator==(const ReflectionOrder& a, const ReflectionOrder& b) {
    return a.sequence_ == b.sequence_;
  }

private:
  int n_;
  std::vector<Reflection> sequence_;
  std::vector<int> position_;
};

/// R-tilde_{u,v} by the recurrence on the largest right descent of v.
QPoly rtilde_recurrence(const Permutation& u, const Permutation& v,
                        RtildeCache& cache = default_cache());

/// Betweenness law: t(i,k) strictly between t(i,j) and t(j,k) for i<j<k.
bool is_reflection_order(const ReflectionOrder& order);

/// Order of the prefix conjugates of a reduced word for w0 (1-based simple
/// generator indices). Throws InvalidOrder if the word is not a reduced word
/// of w0.
ReflectionOrder reflection_order_from_word(int n, const std::vector<int>& word);

/// Sum of q^|path| over label-increasing paths u -> v. Throws InvalidOrder.
QPoly rtilde_dyer(const Interval& interval, const ReflectionOrder& order);

/// a[p] as a polynomial sum_k a[p][k] q^k: order-increasing paths from u to
/// p whose support meets [z, v] only at p, for every p in [z, v].
using PathCountTable = std::map<Index, QPoly>;
PathCountTable increasing_path_counts(const Interval& interval,
                                      const Permutation& z,
                                      const ReflectionOrder& order);
PathCountTable increasing_path_counts(const Interval& interval, Index z,
                                      const ReflectionOrder& order);

/// (a, b): a strictly before b.
using PrecedenceConstraint = std::pair<Reflection, Reflection>;

/// Reflection orders satisfying every constraint, from a depth-first search
/// over reduced words of w0. limit == 0 means no limit.
std::vector<ReflectionOrder>
constrained_orders(int n, const std::vector<PrecedenceConstraint>& must_precede,
                   std::size_t limit = 0);

/// Reduced words of w0 in the same order as constrained_orders(n, {}).
std::vector<std::vector<int>> reduced_words_of_longest(int n, std::size_t limit = 0);

} // namespace bruhat
