#pragma once

// Hypercube spanning, upper hypercube decompositions, joins, shortcuts and
// R-elements.
//
// Hypercubes are searched in the full Bruhat graph of S_n: a cube with top p
// lives in the lower interval [e, p] and is not confined to the interval the
// spanning edges were taken from.

#include "bruhat/interval.hpp"
#include "bruhat/qpoly.hpp"
#include "bruhat/rtilde_cache.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

namespace bruhat {

/// Bruhat-graph arrows sources[k] -> target sharing one target.
struct EdgeSet {
  Permutation target;
  std::vector<Permutation> sources;

  std::size_t size() const { return sources.size(); }
};

/// theta : P(E) -> W indexed by bitmask over E's sources; assignment[full]
/// is the target and assignment[full & ~(1<<k)] is sources[k].
struct HypercubeEmbedding {
  std::vector<Permutation> assignment;
  int rank = 0;

  const Permutation& bottom() const { return assignment.front(); }
  const Permutation& top() const { return assignment.back(); }
};

/// The embedding if exactly one exists, otherwise nothing.
std::optional<HypercubeEmbedding> spans_hypercube(const EdgeSet& edges);
/// Same; additionally checks the arrows belong to the interval.
std::optional<HypercubeEmbedding> spans_hypercube(const Interval& interval,
                                                  const EdgeSet& edges);

/// Number of valid injective assignments, counting stops at cap.
int count_hypercube_embeddings(const EdgeSet& edges, int cap = 2);

/// Every subfamily with pairwise Bruhat-incomparable sources spans a cube.
bool spans_cluster(const EdgeSet& edges);
bool spans_cluster(const Interval& interval, const EdgeSet& edges);

/// E^p = {x -> p : x in [u,v] \ [z,v]}.
EdgeSet inflow(const Interval& interval, const Permutation& z, const Permutation& p);

enum class StandardKind : std::uint8_t {
  LeftDropLast = 1,   // min([u,v] ∩ W_{S\{s_{n-1}}} v)
  LeftDropFirst = 2,  // min([u,v] ∩ W_{S\{s_1}} v)
  RightDropLast = 4,  // min([u,v] ∩ v W_{S\{s_{n-1}}})
  RightDropFirst = 8, // min([u,v] ∩ v W_{S\{s_1}})
};

struct StandardHcd {
  Permutation z;
  std::uint8_t kinds = 0; // bitwise or of StandardKind
};

class StandardHcdMissing : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Memoized decomposition queries on one ambient interval [u,v]. Every query
/// takes a bottom x and answers it for the subinterval [x,v], whose Bruhat
/// graph and distances are the restrictions of the ambient ones.
///
/// Not thread-safe; use one instance per worker.
class HcdAnalysis {
public:
  explicit HcdAnalysis(const Interval& interval, RtildeCache& cache = default_cache());

  const Interval& interval() const { return interval_; }

  EdgeSet inflow(Index bottom, Index z, Index p) const;
  bool spans_cluster(const EdgeSet& edges);
  bool is_upper_hcd(Index bottom, Index z);
  /// Minimum of [z,v] ∩ [x,v].
  std::optional<Index> join(Index z, Index x) const;
  bool is_amazing(Index bottom, Index z);

  /// Shortcuts from the geodesic definition, sorted by index.
  const std::vector<Index>& shortcuts(Index bottom, Index z);
  /// Shortcuts via the distance characterization of upper decompositions.
  std::vector<Index> shortcuts_by_cover_distance(Index bottom, Index z) const;

  QPoly rtilde(Index x, Index y) const;
  QPoly rtilde_z(Index bottom, Index z);
  bool is_r_element(Index bottom, Index z);
  bool is_amazing_r_element(Index bottom, Index z);

  std::vector<StandardHcd> standard_hcds(Index bottom) const;
  std::vector<Index> enumerate_hcds(Index bottom, bool amazing_only);

  /// Memoized spans_hypercube; the embedding is relative to the sources
  /// sorted in permutation order.
  const std::optional<HypercubeEmbedding>& cube(const EdgeSet& edges);

private:
  const Interval& interval_;
  RtildeCache& cache_;
  Index m_;
  std::vector<std::int8_t> hcd_;
  std::vector<std::int8_t> amazing_;
  std::vector<std::int8_t> r_element_;
  std::vector<std::optional<std::vector<Index>>> shortcuts_;
  std::map<std::vector<std::uint64_t>, std::optional<HypercubeEmbedding>> cubes_;
};

bool is_upper_hcd(const Interval& interval, const Permutation& z);
std::vector<StandardHcd> standard_hcds(const Interval& interval);
std::optional<Permutation> join(const Interval& interval, const Permutation& z,
                                const Permutation& x);
bool is_amazing(const Interval& interval, const Permutation& z);
std::vector<Permutation> shortcuts(const Interval& interval, const Permutation& z);
std::vector<Permutation> shortcuts_by_cover_distance(const Interval& interval,
                                                     const Permutation& z);
QPoly rtilde_z(const Interval& interval, const Permutation& z);
bool is_R_element(const Interval& interval, const Permutation& z);
bool is_amazing_R_element(const Interval& interval, const Permutation& z);
std::vector<Permutation> enumerate_hcds(const Interval& interval, bool amazing_only);

std::string standard_kind_names(std::uint8_t kinds);

} // namespace bruhat
