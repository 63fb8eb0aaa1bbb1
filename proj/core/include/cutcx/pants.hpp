#ifndef CUTCX_PANTS_HPP
#define CUTCX_PANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cutcx/cuts.hpp"
#include "cutcx/graph.hpp"

namespace cutcx {

/// A pairwise-compatible family of distinct non-peripheral cuts, intended as
/// a maximal family (every cut outside crosses a member, finitely often).
struct PantsDecomposition {
  SpaceSpec spec;
  std::vector<Cut> cuts;
};

/// Validates pairwise compatibility and distinctness.
PantsDecomposition make_pants(SpaceSpec spec, std::vector<Cut> cuts);

/// The cylinder cuts [s] | complement for all binary strings 1 <= |s| <= d,
/// deduplicated as partitions (the two depth-one strings name the same cut).
PantsDecomposition standard_cantor_pants(int max_len);

/// Restriction to a closed subspace: each member reinterpreted over the new
/// spec, degenerate and peripheral restrictions dropped, deduplicated.
PantsDecomposition restrict_pants(const SpaceSpec& spec, const PantsDecomposition& pants);

/// Indices of the members crossing c. Exact.
std::vector<int> crossing_set(const Cut& c, const PantsDecomposition& pants);

struct PantsBoundedReport {
  int probe_depth = 0;
  int members = 0;
  int probes_checked = 0;
  bool pairwise_compatible = false;
  bool every_probe_crossed = false;
  int max_crossing_set = 0;
  std::string first_uncrossed;  // label of a counterexample probe, if any
};

/// Certificate for the pants conditions against every non-member probe cut of
/// canonical depth <= probe_depth: each one crosses at least one member, and
/// the crossing sets stay finite (their maximum size is reported).
PantsBoundedReport verify_pants_bounded(const PantsDecomposition& pants, int probe_depth);

struct AdjacencyOutcome {
  enum class Kind { Witness, NoneExact, UnknownAtDepth };
  Kind kind = Kind::UnknownAtDepth;
  std::optional<Cut> witness;
  int search_depth = 0;
};

/// Searches for a cut crossing members i and j and no other member. Exact on
/// finite specs; on infinite specs absence is only "unknown at this depth".
AdjacencyOutcome adjacent(const PantsDecomposition& pants, int i, int j, int search_depth);

/// The adjacency graph A(Gamma) of a pants decomposition over a finite spec,
/// computed exactly.
CutGraph adjacency_graph_finite(const PantsDecomposition& pants);

/// All maximal pairwise-compatible families of non-peripheral cuts of
/// Finite(n); every one has exactly n-3 members. Supported for 5 <= n <= 8.
std::vector<PantsDecomposition> enumerate_pants_finite(int n);

/// Compatible, and exactly one pairwise side intersection is a single point.
bool is_peripheral_pair(const Cut& a, const Cut& b);

/// Number of connected components of the opposite graph of the induced
/// subgraph on L(a) & L(b). Requires a full finite complex containing both
/// cuts, both compatible, distinct and non-outermost.
int peripheral_pair_via_links(const CutGraph& full_complex, const Cut& a, const Cut& b);

struct ValenceCriterionReport {
  int n = 0;
  int decompositions = 0;
  bool valence_at_most_two = false;   // every vertex of every A(Gamma)
  bool outermost_iff_low_valence = false;  // the biconditional (n >= 7)
  bool biconditional_fails = false;        // witnessed failure (n == 6)
};

/// Sweeps every pants decomposition of Finite(n) and its adjacency graph.
ValenceCriterionReport valence_criterion_check(int n);

struct ValenceOneReport {
  int n = 0;
  int decompositions = 0;
  int qualifying = 0;  // (Gamma, outermost gamma, peripheral partner) triples
  bool holds = false;  // every qualifying gamma has valence one
};

/// Outermost cuts in a peripheral pair inside a pants decomposition have
/// valence one in its adjacency graph.
ValenceOneReport valence_one_check(int n);

}  // namespace cutcx

#endif
