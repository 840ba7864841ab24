#pragma once

// Double shortcuts DS(z, z'), the DS-symmetry equivalence relation on amazing
// decompositions, and the verification drivers built on them.

#include "bruhat/hcd.hpp"
#include "bruhat/report.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bruhat {

class JoinMissing : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Multiset of (degree, element) pairs in canonical sorted form.
class DegreeMultiset {
public:
  using Item = std::pair<int, Permutation>;

  void add(int degree, const Permutation& element, std::size_t count = 1);
  std::vector<std::pair<Item, std::size_t>> entries() const;
  std::size_t total() const;
  bool empty() const { return counts_.empty(); }
  /// "{(1,321),(3,321)}" with repeated items listed once per copy.
  std::string str() const;
  nlohmann::json to_json() const;

  friend bool operator==(const DegreeMultiset&, const DegreeMultiset&) = default;

private:
  std::map<Item, std::size_t> counts_;
};

/// {(d(x,p) + d(p,b), b) : p in W^z_[x,v], b in W^{z' v p}_[p,v]} for the
/// subinterval with the given bottom x. Throws JoinMissing.
DegreeMultiset ds_multiset(HcdAnalysis& analysis, Index bottom, Index z, Index z2);
DegreeMultiset ds_multiset(const Interval& interval, const Permutation& z,
                           const Permutation& z2);

bool ds_symmetric(HcdAnalysis& analysis, Index bottom, Index z, Index z2);
bool ds_symmetric(const Interval& interval, const Permutation& z, const Permutation& z2);

/// Classes of the transitive closure of DS symmetry over the amazing
/// decompositions of the interval, each class sorted, classes ordered by
/// their first element.
std::vector<std::vector<Index>> equivalence_classes(HcdAnalysis& analysis,
                                                    bool include_bottom = true);
std::vector<std::vector<Permutation>> equivalence_classes(const Interval& interval,
                                                          bool include_bottom = true);

CheckRecord verify_em0(HcdAnalysis& analysis);
CheckRecord verify_congettura(HcdAnalysis& analysis);
CheckRecord verify_strong_ds(HcdAnalysis& analysis);
CheckRecord verify_em0(const Interval& interval);
CheckRecord verify_congettura(const Interval& interval);
CheckRecord verify_strong_ds(const Interval& interval);

/// The seven expressions of the double-sum equation chain, in order.
struct BolognaChain {
  std::vector<QPoly> lines;
  bool all_equal() const;
};

BolognaChain bologna_chain(HcdAnalysis& analysis, Index z, Index z2);

/// Hypotheses (1)-(3) for (z, z'); if they hold the conclusion and every
/// line of the chain must agree (Fail otherwise). Skip if a hypothesis
/// fails.
CheckRecord verify_bologna(HcdAnalysis& analysis, Index z, Index z2);
CheckRecord verify_bologna(const Interval& interval, const Permutation& z,
                           const Permutation& z2);

struct ProductPair {
  Permutation z1, z1_prime; // in the first factor
  Permutation z2, z2_prime; // in the second factor
};

/// Builds [u1+u2, v1+v2] by direct sum and checks, for each pair, the
/// componentwise shortcut characterizations and that DS symmetry of both
/// factors carries over to the product.
CheckRecord verify_product(const Interval& first, const Interval& second,
                           const std::vector<ProductPair>& pairs);

} // namespace bruhat
