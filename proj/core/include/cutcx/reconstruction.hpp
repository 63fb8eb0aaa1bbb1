#ifndef CUTCX_RECONSTRUCTION_HPP
#define CUTCX_RECONSTRUCTION_HPP

#include <cstdint>
#include <vector>

#include "cutcx/automorphisms.hpp"
#include "cutcx/graph.hpp"

namespace cutcx {

/// The cut complex of Finite(n) with per-vertex point masks (bit i = point i;
/// every stored mask contains point 0). Vertices are in canonical cut order.
struct FiniteComplex {
  int n = 0;
  SpaceSpec spec;
  AtomSpace atoms;
  std::vector<std::uint64_t> side_masks;
  CutGraph graph;
  std::vector<std::pair<std::uint64_t, int>> mask_index;  // sorted for lookup

  std::uint64_t full_mask() const { return (std::uint64_t(1) << n) - 1; }
  int vertex_of_mask(std::uint64_t side) const;  // either side accepted
};

FiniteComplex finite_complex(int n);

/// Push-forward action of a point permutation on the cut complex, as a
/// vertex permutation. A group homomorphism Sym(n) -> Aut.
std::vector<int> induced_automorphism(const std::vector<int>& point_perm,
                                      const FiniteComplex& fc);

/// Rebuilds the point bijection from an isomorphism of cut complexes.
/// For n = 4 the basepoint convention fixes point 0 -> point 0; for n >= 5
/// each point is located as the intersection of the small sides of two
/// crossing outermost cuts, cross-checked over a second witness pair.
/// Throws std::invalid_argument on adversarial (non-isomorphism) input.
std::vector<int> reconstruct(const FiniteComplex& from, const FiniteComplex& to,
                             const std::vector<int>& iso);

/// induced_automorphism(f) equals the given vertex map everywhere.
bool verify_geometric(const FiniteComplex& fc, const std::vector<int>& iso,
                      const std::vector<int>& point_bijection);

/// All point permutations acting trivially on the complex.
std::vector<std::vector<int>> kernel_of_action(int n);

struct StabilizerCheck {
  std::vector<Cut> cuts;                    // the finite family G
  std::vector<std::uint64_t> cut_masks;     // one side per cut
  bool sphere_based = false;
  bool added_peripheral_pairs = false;
  bool verified = false;                    // Stab(G) maps K into U, by sweep over Sym(n)
};

/// Builds a finite cut family whose stabilizer is contained in
/// { sigma : sigma(K) inside U } and verifies that containment exhaustively.
/// K and U are point masks with K nonempty, K inside U, U proper.
StabilizerCheck stabilizer_check(int n, std::uint64_t k_points, std::uint64_t u_points);

}  // namespace cutcx

#endif
