#ifndef CUTCX_AUTOMORPHISMS_HPP
#define CUTCX_AUTOMORPHISMS_HPP

#include <cstdint>
#include <vector>

#include "cutcx/graph.hpp"

namespace cutcx {

/// Exact automorphism group of a graph. Generators are the stabilizer-chain
/// coset representatives found by the backtracking search; the order is the
/// product of the chain orbit sizes (cross-checked against the leaf count).
struct AutomorphismGroup {
  std::uint64_t order = 0;
  std::vector<std::vector<int>> generators;
};

/// Backtracking over vertices refined by iterated neighborhood invariants.
/// Exact; throws std::length_error above 160 vertices.
AutomorphismGroup graph_automorphisms(const CutGraph& g);

/// Every automorphism, in a deterministic order. Throws when the group is
/// larger than the cap.
std::vector<std::vector<int>> all_graph_automorphisms(const CutGraph& g,
                                                      std::uint64_t cap = 1 << 20);

bool is_graph_automorphism(const CutGraph& g, const std::vector<int>& perm);

}  // namespace cutcx

#endif
