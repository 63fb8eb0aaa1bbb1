#ifndef CUTCX_CUTS_HPP
#define CUTCX_CUTS_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cutcx/atoms.hpp"
#include "cutcx/space.hpp"

namespace cutcx {

/// An unordered partition of a space into two complementary clopen sets.
/// The side with the lexicographically least canonical antichain is stored
/// first, so equality and ordering are partition identity.
class Cut {
 public:
  /// Builds the cut with the given side; throws when the side canonicalizes
  /// to the empty set or the whole space.
  static Cut from_side(ClopenSet side);
  static Cut from_strings(const SpaceSpec& spec, const std::vector<std::string>& side);

  const SpaceSpec& space() const { return sides_[0].space(); }
  const ClopenSet& side(int i) const { return sides_.at(static_cast<std::size_t>(i)); }

  /// The side containing the given clopen set, if one does.
  bool operator==(const Cut& o) const { return sides_[0] == o.sides_[0]; }
  bool operator!=(const Cut& o) const { return !(*this == o); }
  bool operator<(const Cut& o) const { return sides_[0] < o.sides_[0]; }

  /// Label used in exports: the first side's antichain joined by commas.
  std::string label() const { return sides_[0].str(); }

 private:
  std::vector<ClopenSet> sides_;  // exactly two, complementary
};

/// Both sides have at least two points.
bool is_nonperipheral(const Cut& c);

/// A side has exactly two points.
bool is_outermost(const Cut& c);

/// All four pairwise side intersections are nonempty. Symmetric, irreflexive.
bool crosses(const Cut& a, const Cut& b);
inline bool compatible(const Cut& a, const Cut& b) { return !crosses(a, b); }

/// Smallest depth whose cylinder classes isolate every point. Finite specs
/// only.
int isolation_depth(const SpaceSpec& spec);

/// All non-peripheral cuts of a finite spec, one per partition, in canonical
/// order.
std::vector<Cut> enumerate_cuts_finite(const SpaceSpec& spec);

/// All non-peripheral cuts whose canonical antichain uses strings of length
/// at most depth, one per partition, in canonical order.
std::vector<Cut> enumerate_cuts_bounded(const SpaceSpec& spec, int depth);

/// Masks over the depth-bounded atom space for the same cut set; each mask is
/// the side containing atom 0. Returned sorted by mask value.
std::vector<std::uint64_t> enumerate_cut_masks(const AtomSpace& atoms);

/// An explicit path of compatible cuts from a to b, endpoints included.
/// Length (edges) is at most 4 on finite specs with >= 5 points and at most 2
/// on infinite specs. Throws on finite specs with < 5 points.
std::vector<Cut> short_path(const Cut& a, const Cut& b);

/// The two collapsed spaces of a non-peripheral cut: side 0 with side 1
/// shrunk to a point, and vice versa. Realized as
/// Union(Subspace(spec, side), Finite(1)).
std::pair<SpaceSpec, SpaceSpec> join_split(const SpaceSpec& spec, const Cut& c);

struct LinkJoinReport {
  bool ok = false;
  int link_size = 0;
  int factor_sizes[2] = {0, 0};
  std::string detail;
};

/// Checks, over cuts of the given depth, that the link of c in the bounded
/// complex is the join of the bounded complexes of the two collapsed spaces:
/// vertex sets biject factor-wise and every cross-factor pair is adjacent.
LinkJoinReport verify_link_join(const SpaceSpec& spec, const Cut& c, int depth);

}  // namespace cutcx

#endif
