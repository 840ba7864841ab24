#pragma once

// Co-simple intervals, antichain-spanned hypercubes through the bottom
// element, double hypercubes DH(z, z'), and the increasing-path lemma.

#include "bruhat/doubles.hpp"
#include "bruhat/rpoly.hpp"

#include <vector>

namespace bruhat {

/// Roots e_i - e_j of the labels of the lower covers of v in [u,v].
struct RootMatrix {
  std::vector<std::vector<int>> rows;

  /// Exact rank by fraction-free elimination.
  int rank() const;
};

RootMatrix coatom_roots(const Interval& interval);
bool is_cosimple(const Interval& interval);

/// A cube spanned at its top by in-arrows with pairwise incomparable sources.
struct AntichainHypercube {
  HypercubeEmbedding embedding;
  Index top;
  int rank;
};

/// Pairs (H, p): p in [z,v], H spanned by an antichain of in-arrows of p,
/// bottom of H equal to the bottom of [bottom, v], H ∩ [z,v] = {p}. The
/// rank-0 cube {p} counts when p is the bottom.
std::vector<AntichainHypercube> antichain_hypercubes(HcdAnalysis& analysis, Index bottom,
                                                     Index z);
std::vector<AntichainHypercube> antichain_hypercubes(const Interval& interval,
                                                     const Permutation& z);

/// {(|H1| + |H2|, b)} over (H1,p) for z in [x,v] and (H2,b) for z' v p in
/// [p,v]. Throws JoinMissing.
DegreeMultiset dh_multiset(HcdAnalysis& analysis, Index bottom, Index z, Index z2);
DegreeMultiset dh_multiset(const Interval& interval, const Permutation& z,
                           const Permutation& z2);

/// Pass on equality, otherwise `on_violation`. Skip if not co-simple.
CheckRecord verify_dh_symmetry(HcdAnalysis& analysis, Index z, Index z2,
                               Status on_violation = Status::Fail);
CheckRecord verify_dh_symmetry(const Interval& interval, const Permutation& z,
                               const Permutation& z2);

/// How the precedence hypothesis on reflection orders is read.
enum class LemmaReading {
  /// t in C[u,v] \ C[z,v] precedes t' in C[z,v].
  Coatoms,
  /// labels of arrows outside [z,v] precede labels of arrows inside [z,v].
  Edges,
  /// reflections whose root lies outside the span of the C[z,v] roots
  /// precede those whose root lies inside it.
  Span,
};

const char* to_string(LemmaReading reading);

std::vector<PrecedenceConstraint> lemma_constraints(const Interval& interval, Index z,
                                                    LemmaReading reading);

/// Sum over x in [z,p] of a[x] * R-tilde_{x,p} for every p in [z,v].
std::map<Index, QPoly> path_count_convolution(HcdAnalysis& analysis,
                                              const PathCountTable& table);

/// All constraint-satisfying orders (first `order_limit` if nonzero) must
/// give the same increasing-path table. Skip when not co-simple, not
/// diamond complete, or no order satisfies the constraints.
CheckRecord verify_lemma_incpaths(HcdAnalysis& analysis, Index z,
                                  LemmaReading reading = LemmaReading::Coatoms,
                                  std::size_t order_limit = 0);
CheckRecord verify_lemma_incpaths(const Interval& interval, const Permutation& z,
                                  LemmaReading reading = LemmaReading::Coatoms,
                                  std::size_t order_limit = 0);

/// Whether (H,p) -> p maps antichain cubes bijectively onto W^z. Finding on
/// failure.
CheckRecord verify_hw_projection(HcdAnalysis& analysis, Index z);
CheckRecord verify_hw_projection(const Interval& interval, const Permutation& z);

} // namespace bruhat
