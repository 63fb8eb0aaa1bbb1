#ifndef CUTCX_JSON_IO_HPP
#define CUTCX_JSON_IO_HPP

#include <string>
#include <vector>

#include "cutcx/graph.hpp"
#include "cutcx/systems.hpp"

namespace cutcx {

/// {"type":"finite","n":5} | {"type":"cantor"} | {"type":"convergent"} |
/// {"type":"union","left":...,"right":...} |
/// {"type":"subspace","base":...,"window":["0","10"]}
/// Also accepts the descriptor wrapped as {"space": ...}.
SpaceSpec parse_space(const std::string& json_text);
std::string space_to_json(const SpaceSpec& spec);

/// Clopen sets travel as sorted arrays of binary strings; root is "".
ClopenSet parse_clopen(const SpaceSpec& spec, const std::string& json_text);
std::string clopen_to_json(const ClopenSet& u);

/// An array of clopen-set arrays (sphere sides).
std::vector<ClopenSet> parse_sides(const SpaceSpec& spec, const std::string& json_text);

/// A JSON array of integers (permutations, point sets).
std::vector<int> parse_int_array(const std::string& json_text);

/// {"n":7,"nested":[[0,1,2,3,4,5],[0,1,2,3,4]]}
StoneSpaceSystem parse_system(const std::string& json_text);

/// {"vertices":[labels...],"edges":[[i,j],...]} with sorted edges.
std::string graph_to_json(const CutGraph& g);
std::string graph_to_dot(const CutGraph& g);

}  // namespace cutcx

#endif
