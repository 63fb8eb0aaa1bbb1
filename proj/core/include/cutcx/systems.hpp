#ifndef CUTCX_SYSTEMS_HPP
#define CUTCX_SYSTEMS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cutcx/graph.hpp"

namespace cutcx {

/// A properly nested chain of subsets of a finite ground space:
/// E_1 = everything, then E_2, E_3, ... as point masks.
struct StoneSpaceSystem {
  int n = 0;
  std::vector<std::uint64_t> nested;  // E_2, E_3, ...; each a proper subset of the previous

  std::uint64_t full_mask() const { return (std::uint64_t(1) << n) - 1; }
  int length() const { return static_cast<int>(nested.size()) + 1; }
};

StoneSpaceSystem make_system(int n, std::vector<std::uint64_t> nested);

/// A cut complex over a system: vertex masks are the sides containing point 0.
struct SystemComplex {
  StoneSpaceSystem sys;
  SpaceSpec spec;
  AtomSpace atoms;
  std::vector<std::uint64_t> side_masks;
  CutGraph graph;

  int vertex_of_mask(std::uint64_t side) const;
};

/// Weakly non-peripheral cuts: each part has two points or meets E_2.
SystemComplex weak_complex(const StoneSpaceSystem& sys);

/// Strongly non-peripheral cuts: each part has two points of the last level.
SystemComplex strong_complex(const StoneSpaceSystem& sys);

/// The permutation preserves every level setwise.
bool is_system_homeo(const std::vector<int>& point_perm, const StoneSpaceSystem& sys);

/// Push-forward of a point permutation on the complex; throws when the vertex
/// set is not preserved.
std::vector<int> induced_vertex_map(const std::vector<int>& point_perm,
                                    const SystemComplex& sc);

/// Vertices adjacent to every other vertex.
std::vector<int> cone_vertices(const CutGraph& g);

struct FixtureReport {
  std::string name;
  bool pass = false;
  std::vector<std::string> lines;
};

/// Executable counterexamples: "weak5", "cone5", "cone6", "strong7".
FixtureReport run_fixture(const std::string& name);

}  // namespace cutcx

#endif
