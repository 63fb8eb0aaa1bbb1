#ifndef CUTCX_SPHERES_HPP
#define CUTCX_SPHERES_HPP

#include <optional>
#include <string>
#include <vector>

#include "cutcx/cuts.hpp"
#include "cutcx/graph.hpp"

namespace cutcx {

/// A family of pairwise-disjoint clopen outer sides whose joint complement is
/// finite. Boundary components are the oriented sides; two sides may name the
/// same unordered cut (the two halves of one partition).
struct Sphere {
  SpaceSpec spec;
  std::vector<ClopenSet> outer;      // U_1..U_k, pairwise disjoint
  std::vector<Cut> boundary;         // the cuts of the outer sides
  ClopenSet residual;                // complement of the union, finite
  std::vector<ClopenSet> punctures;  // the residual points, as singleton clopens

  int boundary_count() const { return static_cast<int>(outer.size()); }
  int puncture_count() const { return static_cast<int>(punctures.size()); }
};

/// Validates and assembles a sphere; error messages name the violated
/// condition (overlapping sides, peripheral boundary, infinite residual).
Sphere make_sphere(const SpaceSpec& spec, std::vector<ClopenSet> sides);

/// c is distinct from every boundary cut and no side of c splits an outer
/// side.
bool is_interior(const Cut& c, const Sphere& s);

/// The finite quotient: each outer side collapsed to one labeled point,
/// punctures kept.
struct QuotientSpace {
  SpaceSpec space;  // Finite(n + k)
  int boundary_count = 0;
  std::vector<std::string> labels;      // "b<i>" for sides, then puncture strings
  std::vector<ClopenSet> label_sets;    // the subset of E each label collapses
};

QuotientSpace quotient_space(const Sphere& s);

/// Label map quotient(outer_sphere) -> quotient(inner_sphere): surviving
/// punctures map to themselves, everything else to the unique inner boundary
/// label whose outer side contains it. Requires the boundary of the inner
/// sphere to be interior to the outer sphere.
std::vector<int> restriction_map(const Sphere& inner, const Sphere& outer_sphere);

/// The collapse E -> quotient(inner) agrees with the composite through
/// quotient(outer_sphere), checked on the cylinder classes refined until
/// every class resolves to a single label of both spheres.
bool verify_triangle(const Sphere& inner, const Sphere& outer_sphere);

struct Exhaustion {
  SpaceSpec spec;
  std::vector<Sphere> levels;
  std::vector<int> cylinder_depths;   // per level; -1 when hand-built
  int certified_depth = -1;           // every cut of canonical depth <= this is
                                      // interior to some level
  bool increasing = false;
  bool complexity = false;            // every inter-level piece has n + k >= 5
  bool infinite_complement = false;
  std::string note;
};

/// Builds a sphere chain from cylinder frontiers of growing depth, skipping
/// depths until every inter-level piece reaches complexity five, and extends
/// it until the exhaustion property certifies to the requested depth and at
/// least min_levels spheres exist.
Exhaustion build_exhaustion(const SpaceSpec& spec, int certify_depth, int min_levels = 2);

/// Wraps explicit spheres and recomputes the property certificates (the
/// complexity flag may legitimately come out false for hand-built chains).
Exhaustion exhaustion_from_spheres(const SpaceSpec& spec, std::vector<Sphere> levels);

/// Re-checks (Increasing), (Complexity), (Infinite Complement) on a chain.
void certify_exhaustion_properties(Exhaustion& ex);

/// Threads through the restriction maps of the first `levels` spheres biject
/// with the cylinder classes of the space at the final granularity.
bool inverse_limit_check(const Exhaustion& ex, int levels);

/// Connected-component analysis of the opposite graph on the intersection of
/// the boundary links, over the depth-bounded complex. On infinite specs the
/// component structure is certified at the stated depth: vertices are the
/// depth-bounded cuts and connectivity is witnessed by explicit splitter cuts
/// one level deeper, all validated by the crossing predicate.
struct LinkComponentsReport {
  int depth = 0;
  int linkint_size = 0;
  int component_count = 0;
  bool exactly_one_core = false;  // exactly one component of quotient-type cuts
  int core_component_size = 0;
  int core_opposite_max_clique = 0;  // clique of the compatibility subgraph
  std::vector<Cut> core_vertices;
};

LinkComponentsReport link_components(const SpaceSpec& spec,
                                     const std::vector<ClopenSet>& sides, int depth);

struct SphereRecognition {
  bool ok = false;
  std::string failure;  // "adjacency" | "components" | "sides" | construction text
  int n = -1;
  int k = -1;
  int components = -1;
  int clique = -1;
  int depth = 0;
};

/// Decides sphere-ness from boundary data. Finite specs are decided by direct
/// set arithmetic; infinite specs by the graph conditions (complete adjacency
/// graph, k+1 link components with exactly one of quotient type, infinite
/// sides), with n recovered from the core clique via n + k - 4 = clique - 1.
SphereRecognition recognize_sphere(const SpaceSpec& spec,
                                   const std::vector<ClopenSet>& sides, int depth);

struct TripleReport {
  bool orientation_found = false;  // outer sides pairwise disjoint
  bool triangle = false;           // adjacency graph of the triple is complete
  bool triple_nonempty = false;    // the three complements meet
};

TripleReport triple_condition_check(const Cut& a, const Cut& b, const Cut& c,
                                    int context_depth);

/// Interior cuts of the sphere within the depth-bounded complex, with the
/// graph isomorphism onto the cut complex of the quotient space.
struct InteriorComplex {
  CutGraph interior;          // induced on interior cuts
  CutGraph quotient_complex;  // cut complex of Finite(n+k)
  std::vector<int> iso;       // interior vertex -> quotient vertex
  bool isomorphic = false;
};

InteriorComplex interior_complex(const Sphere& s, int depth);

}  // namespace cutcx

#endif
