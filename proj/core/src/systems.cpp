#include "cutcx/systems.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "cutcx/automorphisms.hpp"
#include "cutcx/reconstruction.hpp"

namespace cutcx {

namespace {

std::uint64_t permute_mask(std::uint64_t mask, const std::vector<int>& perm) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (mask >> i & 1) out |= std::uint64_t(1) << perm[i];
  return out;
}

}  // namespace

StoneSpaceSystem make_system(int n, std::vector<std::uint64_t> nested) {
  if (n < 2 || n > 62) throw std::invalid_argument("system ground size out of range");
  StoneSpaceSystem sys{n, std::move(nested)};
  std::uint64_t prev = sys.full_mask();
  if (sys.nested.empty())
    throw std::invalid_argument("a system needs at least one nested level");
  for (std::uint64_t level : sys.nested) {
    if (level == 0) throw std::invalid_argument("nested levels must be nonempty");
    if ((level & ~prev) || level == prev)
      throw std::invalid_argument("levels must be properly nested");
    prev = level;
  }
  return sys;
}

int SystemComplex::vertex_of_mask(std::uint64_t side) const {
  std::uint64_t norm = (side & 1) ? side : (sys.full_mask() & ~side);
  for (std::size_t i = 0; i < side_masks.size(); ++i)
    if (side_masks[i] == norm) return static_cast<int>(i);
  throw std::invalid_argument("mask does not name a vertex of the system complex");
}

namespace {

SystemComplex build_system_complex(const StoneSpaceSystem& sys,
                                   bool (*keep)(std::uint64_t, std::uint64_t,
                                                const StoneSpaceSystem&)) {
  SystemComplex sc;
  sc.sys = sys;
  sc.spec = SpaceSpec::finite(sys.n);
  sc.atoms = AtomSpace::build(sc.spec, sys.n - 1);
  const std::uint64_t full = sys.full_mask();
  std::vector<std::uint64_t> masks;
  const std::uint64_t top = std::uint64_t(1) << sys.n;
  for (std::uint64_t m = 1; m < top - 1; m += 2)
    if (keep(m, full & ~m, sys)) masks.push_back(m);

  std::vector<Cut> cuts;
  for (std::uint64_t m : masks) cuts.push_back(Cut::from_side(sc.atoms.clopen(m)));
  std::vector<std::size_t> idx(cuts.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return cuts[a] < cuts[b]; });
  std::vector<Cut> sorted;
  for (std::size_t i : idx) {
    sorted.push_back(cuts[i]);
    sc.side_masks.push_back(masks[i]);
  }
  BitMatrix adj(static_cast<int>(sorted.size()));
  for (std::size_t i = 0; i < sc.side_masks.size(); ++i)
    for (std::size_t j = i + 1; j < sc.side_masks.size(); ++j) {
      std::uint64_t a = sc.side_masks[i], b = sc.side_masks[j];
      bool cross = (a & b) && (a & ~b & full) && (~a & b & full) && ((~a & ~b & full) != 0);
      adj.set_sym(static_cast<int>(i), static_cast<int>(j), !cross);
    }
  sc.graph = CutGraph::from_adjacency(std::move(sorted), std::move(adj));
  return sc;
}

bool weak_keep(std::uint64_t a, std::uint64_t b, const StoneSpaceSystem& sys) {
  auto part_ok = [&](std::uint64_t part) {
    return std::popcount(part) >= 2 || (part & sys.nested.front());
  };
  return part_ok(a) && part_ok(b);
}

bool strong_keep(std::uint64_t a, std::uint64_t b, const StoneSpaceSystem& sys) {
  std::uint64_t last = sys.nested.back();
  return std::popcount(a & last) >= 2 && std::popcount(b & last) >= 2;
}

}  // namespace

SystemComplex weak_complex(const StoneSpaceSystem& sys) {
  return build_system_complex(sys, weak_keep);
}

SystemComplex strong_complex(const StoneSpaceSystem& sys) {
  return build_system_complex(sys, strong_keep);
}

bool is_system_homeo(const std::vector<int>& point_perm, const StoneSpaceSystem& sys) {
  if (static_cast<int>(point_perm.size()) != sys.n)
    throw std::invalid_argument("permutation size mismatch");
  for (std::uint64_t level : sys.nested)
    if (permute_mask(level, point_perm) != level) return false;
  return true;
}

std::vector<int> induced_vertex_map(const std::vector<int>& point_perm,
                                    const SystemComplex& sc) {
  std::vector<int> out(sc.side_masks.size());
  for (std::size_t v = 0; v < sc.side_masks.size(); ++v)
    out[v] = sc.vertex_of_mask(permute_mask(sc.side_masks[v], point_perm));
  return out;
}

std::vector<int> cone_vertices(const CutGraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.size(); ++v)
    if (g.degree(v) == g.size() - 1) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------
// Fixtures

namespace {

void note(FixtureReport& r, bool ok, const std::string& what) {
  r.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  if (!ok) r.pass = false;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

FixtureReport fixture_weak5() {
  FixtureReport r;
  r.name = "weak5";
  r.pass = true;
  // E1 = {a..e} = {0..4}, E2 = {a,b}, E3 = {a}.
  StoneSpaceSystem sys = make_system(5, {0b00011, 0b00001});
  SystemComplex wc = weak_complex(sys);

  int va = -1, vb = -1;
  try {
    va = wc.vertex_of_mask(0b00001);
    vb = wc.vertex_of_mask(0b00010);
  } catch (const std::invalid_argument&) {
  }
  note(r, va >= 0 && vb >= 0, "{a}|rest and {b}|rest are weakly non-peripheral vertices");
  if (!r.pass) return r;

  // The transposition of the two cone cuts is an automorphism.
  std::vector<int> phi(static_cast<std::size_t>(wc.graph.size()));
  std::iota(phi.begin(), phi.end(), 0);
  std::swap(phi[static_cast<std::size_t>(va)], phi[static_cast<std::size_t>(vb)]);
  note(r, is_graph_automorphism(wc.graph, phi), "swapping {a}|rest with {b}|rest preserves edges");

  // No system homeomorphism induces it: anything inducing phi must move a to b.
  bool induced_by_system_homeo = false;
  std::vector<int> perm(5);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (!is_system_homeo(perm, sys)) continue;
    try {
      if (induced_vertex_map(perm, wc) == phi) induced_by_system_homeo = true;
    } catch (const std::invalid_argument&) {
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  note(r, !induced_by_system_homeo, "no system homeomorphism induces the swap");
  return r;
}

FixtureReport fixture_cone(int n) {
  FixtureReport r;
  r.name = "cone" + std::to_string(n);
  r.pass = true;
  StoneSpaceSystem sys = make_system(n, {0b1});
  SystemComplex wc = weak_complex(sys);

  int kappa = wc.vertex_of_mask(0b1);
  auto cones = cone_vertices(wc.graph);
  note(r, cones.size() == 1 && cones[0] == kappa, "the isolated-point cut is the unique cone vertex");

  AutomorphismGroup aut = graph_automorphisms(wc.graph);
  note(r, aut.order == factorial(n),
       "weak complex automorphism order " + std::to_string(aut.order) + " = " +
           std::to_string(n) + "!");

  std::uint64_t homeos = 0;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (is_system_homeo(perm, sys)) ++homeos;
  } while (std::next_permutation(perm.begin(), perm.end()));
  note(r, homeos == factorial(n - 1),
       "system homeomorphism order " + std::to_string(homeos) + " = " +
           std::to_string(n - 1) + "!");

  // Removing the cone vertex leaves the plain cut complex.
  std::vector<int> rest;
  for (int v = 0; v < wc.graph.size(); ++v)
    if (v != kappa) rest.push_back(v);
  CutGraph pruned = wc.graph.induced(rest);
  FiniteComplex fc = finite_complex(n);
  bool same = pruned.size() == fc.graph.size();
  if (same) {
    for (int i = 0; i < pruned.size() && same; ++i) {
      if (!(pruned.vertex(i) == fc.graph.vertex(i))) same = false;
      for (int j = i + 1; j < pruned.size() && same; ++j)
        if (pruned.edge(i, j) != fc.graph.edge(i, j)) same = false;
    }
  }
  note(r, same, "removing the cone vertex leaves the plain cut complex");
  return r;
}

FixtureReport fixture_strong7() {
  FixtureReport r;
  r.name = "strong7";
  r.pass = true;
  // E1 = {a..g} = {0..6}, E2 = {a..f}, E3 = {a..e}.
  StoneSpaceSystem sys = make_system(7, {0b0111111, 0b0011111});
  SystemComplex sc = strong_complex(sys);
  note(r, sc.graph.size() == 40,
       "strong complex has " + std::to_string(sc.graph.size()) + " vertices (expected 40)");

  // phi swaps f and g and fixes the last level pointwise.
  std::vector<int> phi_points = {0, 1, 2, 3, 4, 6, 5};
  note(r, !is_system_homeo(phi_points, sys), "the swap is not a system homeomorphism");

  bool induces = true;
  std::vector<int> vmap;
  try {
    vmap = induced_vertex_map(phi_points, sc);
  } catch (const std::invalid_argument&) {
    induces = false;
  }
  note(r, induces, "the swap preserves the strong vertex set");
  if (induces)
    note(r, is_graph_automorphism(sc.graph, vmap), "the swap induces a strong-complex automorphism");
  return r;
}

}  // namespace

FixtureReport run_fixture(const std::string& name) {
  if (name == "weak5") return fixture_weak5();
  if (name == "cone5") return fixture_cone(5);
  if (name == "cone6") return fixture_cone(6);
  if (name == "strong7") return fixture_strong7();
  throw std::invalid_argument("unknown fixture: " + name +
                              " (expected weak5, cone5, cone6 or strong7)");
}

}  // namespace cutcx
