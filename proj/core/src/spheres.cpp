#include "cutcx/spheres.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cutcx/reconstruction.hpp"
#include "cutcx/strings.hpp"

namespace cutcx {

namespace {

bool crosses_mask(std::uint64_t a, std::uint64_t b, std::uint64_t full) {
  a &= full;
  b &= full;
  return (a & b) && (a & ~b & full) && (~a & b & full) && ((~a & ~b & full) != 0);
}

// Splits a finite clopen set into its points.
std::vector<ClopenSet> isolate_points(const SpaceSpec& spec, const ClopenSet& u) {
  std::vector<ClopenSet> out;
  std::vector<std::string> stack(u.antichain().begin(), u.antichain().end());
  while (!stack.empty()) {
    std::string s = stack.back();
    stack.pop_back();
    CountClass c = count_cylinder(spec, s);
    if (c.is_zero()) continue;
    if (c.is_infinite()) throw std::domain_error("cannot isolate points of an infinite set");
    if (c == CountClass::exactly(1)) {
      out.push_back(canonicalize(spec, {s}));
      continue;
    }
    if (s.size() > 96) throw std::logic_error("point separation exceeded depth cap");
    stack.push_back(s + "0");
    stack.push_back(s + "1");
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The shallowest descendant cylinder of s whose two halves both meet E.
std::string first_split(const SpaceSpec& spec, std::string s) {
  for (int guard = 0; guard < 96; ++guard) {
    bool zero0 = count_cylinder(spec, s + "0").is_zero();
    bool zero1 = count_cylinder(spec, s + "1").is_zero();
    if (!zero0 && !zero1) return s;
    s += zero0 ? "1" : "0";
  }
  throw std::logic_error("cylinder refuses to split; is it a single point?");
}

}  // namespace

// ---------------------------------------------------------------------------
// Sphere construction

Sphere make_sphere(const SpaceSpec& spec, std::vector<ClopenSet> sides) {
  if (sides.empty()) throw std::invalid_argument("sphere needs at least one boundary side");
  Sphere s;
  s.spec = spec;
  for (auto& u : sides) {
    if (u.space() != spec) throw std::domain_error("side over a different space");
    if (u.empty()) throw std::invalid_argument("sphere side is empty");
  }
  for (std::size_t i = 0; i < sides.size(); ++i)
    for (std::size_t j = i + 1; j < sides.size(); ++j)
      if (!sides[i].intersect(sides[j]).empty())
        throw std::invalid_argument("overlapping sides: boundary sides must be disjoint");
  ClopenSet all = empty_clopen(spec);
  for (auto& u : sides) {
    Cut c = Cut::from_side(u);  // throws on degenerate
    if (!is_nonperipheral(c))
      throw std::invalid_argument("peripheral boundary: side or complement below two points");
    s.boundary.push_back(c);
    all = all.unite(u);
  }
  s.residual = all.complement();
  if (s.residual.count().is_infinite())
    throw std::invalid_argument("infinite residual: sides must cover all but finitely many points");
  s.punctures = isolate_points(spec, s.residual);
  s.outer = std::move(sides);
  return s;
}

bool is_interior(const Cut& c, const Sphere& s) {
  if (c.space() != s.spec) throw std::domain_error("cut over a different space");
  for (const Cut& b : s.boundary)
    if (c == b) return false;
  for (const ClopenSet& u : s.outer) {
    if (!c.side(0).intersect(u).empty() && !c.side(1).intersect(u).empty()) return false;
  }
  return true;
}

QuotientSpace quotient_space(const Sphere& s) {
  QuotientSpace q;
  q.boundary_count = s.boundary_count();
  for (int i = 0; i < s.boundary_count(); ++i) {
    q.labels.push_back("b" + std::to_string(i));
    q.label_sets.push_back(s.outer[static_cast<std::size_t>(i)]);
  }
  for (const ClopenSet& p : s.punctures) {
    q.labels.push_back(p.str());
    q.label_sets.push_back(p);
  }
  q.space = SpaceSpec::finite(s.boundary_count() + s.puncture_count());
  return q;
}

std::vector<int> restriction_map(const Sphere& inner, const Sphere& outer_sphere) {
  if (inner.spec != outer_sphere.spec)
    throw std::domain_error("spheres over different spaces");
  for (const Cut& b : inner.boundary)
    if (!is_interior(b, outer_sphere))
      throw std::domain_error("non-nested spheres: inner boundary not interior to the outer sphere");

  QuotientSpace qo = quotient_space(outer_sphere);
  QuotientSpace qi = quotient_space(inner);
  std::vector<int> map;
  map.reserve(qo.label_sets.size());
  for (const ClopenSet& x : qo.label_sets) {
    int target = -1;
    if (x.subset_of(inner.residual)) {
      for (std::size_t j = 0; j < qi.label_sets.size(); ++j)
        if (qi.label_sets[j] == x) target = static_cast<int>(j);
      if (target < 0)
        throw std::domain_error("non-nested spheres: residual label is not a surviving puncture");
    } else {
      for (int j = 0; j < inner.boundary_count(); ++j)
        if (x.subset_of(inner.outer[static_cast<std::size_t>(j)])) target = j;
      if (target < 0)
        throw std::domain_error("non-nested spheres: label not contained in one inner side");
    }
    map.push_back(target);
  }
  return map;
}

namespace {

// The unique label whose set contains [s] by cylinder prefix, when resolved.
std::optional<int> label_by_prefix(const QuotientSpace& q, const std::string& s) {
  for (std::size_t i = 0; i < q.label_sets.size(); ++i)
    for (const std::string& t : q.label_sets[i].antichain())
      if (prefix_of(t, s)) return static_cast<int>(i);
  return std::nullopt;
}

bool triangle_rec(const SpaceSpec& spec, const QuotientSpace& qi, const QuotientSpace& qo,
                  const std::vector<int>& rmap, std::string& s, int guard) {
  if (count_cylinder(spec, s).is_zero()) return true;
  auto li = label_by_prefix(qi, s);
  auto lo = label_by_prefix(qo, s);
  if (li && lo) return rmap[static_cast<std::size_t>(*lo)] == *li;
  if (guard <= 0) throw std::logic_error("triangle check failed to resolve labels");
  for (int b = 0; b < 2; ++b) {
    s.push_back(static_cast<char>('0' + b));
    bool ok = triangle_rec(spec, qi, qo, rmap, s, guard - 1);
    s.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool verify_triangle(const Sphere& inner, const Sphere& outer_sphere) {
  std::vector<int> rmap = restriction_map(inner, outer_sphere);
  QuotientSpace qi = quotient_space(inner);
  QuotientSpace qo = quotient_space(outer_sphere);
  std::string s;
  return triangle_rec(inner.spec, qi, qo, rmap, s, 96);
}

// ---------------------------------------------------------------------------
// Exhaustions

void certify_exhaustion_properties(Exhaustion& ex) {
  ex.increasing = true;
  ex.complexity = true;
  ex.infinite_complement = true;
  for (const Sphere& s : ex.levels)
    for (const ClopenSet& u : s.outer)
      if (!u.count().is_infinite()) ex.infinite_complement = false;
  for (std::size_t i = 0; i + 1 < ex.levels.size(); ++i) {
    const Sphere& a = ex.levels[i];
    const Sphere& b = ex.levels[i + 1];
    for (const Cut& c : a.boundary)
      if (!is_interior(c, b)) ex.increasing = false;
    // The piece between one boundary side of a and the next level: its own
    // reversed boundary plus the deeper sides inside it.
    for (const ClopenSet& x : a.outer) {
      int inner_sides = 0;
      ClopenSet covered = empty_clopen(ex.spec);
      for (const ClopenSet& y : b.outer)
        if (y.subset_of(x)) {
          ++inner_sides;
          covered = covered.unite(y);
        }
      CountClass leftover = x.intersect(covered.complement()).count();
      if (leftover.is_infinite()) {
        ex.complexity = false;
        continue;
      }
      std::uint64_t piece = 1 + static_cast<std::uint64_t>(inner_sides) + leftover.value();
      if (piece < 5) ex.complexity = false;
    }
  }
}

Exhaustion exhaustion_from_spheres(const SpaceSpec& spec, std::vector<Sphere> levels) {
  if (levels.empty()) throw std::invalid_argument("exhaustion needs at least one sphere");
  Exhaustion ex;
  ex.spec = spec;
  ex.levels = std::move(levels);
  ex.cylinder_depths.assign(ex.levels.size(), -1);
  certify_exhaustion_properties(ex);
  return ex;
}

namespace {

// Certificate that every cut of canonical depth <= L is interior to this
// sphere: a side whose canonical antichain stays deeper than L can never be
// split by an antichain of depth <= L (the shallow cylinders either contain
// the deep one or miss it), and the boundary cuts themselves have canonical
// depth > L so they differ from every depth-bounded cut.
bool covers_depth(const Sphere& s, int L) {
  for (const ClopenSet& u : s.outer)
    for (const std::string& t : u.antichain())
      if (static_cast<int>(t.size()) <= L) return false;
  return true;
}

}  // namespace

Exhaustion build_exhaustion(const SpaceSpec& spec, int certify_depth, int min_levels) {
  if (!count_space(spec).is_infinite())
    throw std::domain_error("exhaustions are for infinite spaces");
  if (min_levels < 1 || certify_depth < 1)
    throw std::invalid_argument("need at least one level and positive depth");

  Exhaustion ex;
  ex.spec = spec;
  for (int d = 1; d <= 40; ++d) {
    auto classes = points_at_depth(spec, d);
    std::vector<ClopenSet> sides;
    for (auto& [str, cnt] : classes)
      if (cnt.is_infinite()) sides.push_back(canonicalize(spec, {str}));
    if (sides.empty()) throw std::logic_error("infinite space with no infinite class");

    Sphere candidate;
    try {
      candidate = make_sphere(spec, sides);
    } catch (const std::invalid_argument&) {
      continue;  // e.g. single infinite class with a lone residual point
    }

    if (!ex.levels.empty()) {
      const Sphere& prev = ex.levels.back();
      bool ok = true;
      for (const Cut& c : prev.boundary)
        if (!is_interior(c, candidate)) ok = false;
      if (ok) {
        for (const ClopenSet& x : prev.outer) {
          int inner_sides = 0;
          ClopenSet covered = empty_clopen(spec);
          for (const ClopenSet& y : candidate.outer)
            if (y.subset_of(x)) {
              ++inner_sides;
              covered = covered.unite(y);
            }
          CountClass leftover = x.intersect(covered.complement()).count();
          if (leftover.is_infinite() ||
              1 + static_cast<std::uint64_t>(inner_sides) + leftover.value() < 5)
            ok = false;
        }
      }
      if (!ok) continue;
    }

    ex.levels.push_back(candidate);
    ex.cylinder_depths.push_back(d);
    if (static_cast<int>(ex.levels.size()) >= min_levels &&
        covers_depth(candidate, certify_depth)) {
      ex.certified_depth = certify_depth;
      certify_exhaustion_properties(ex);
      ex.note = "cylinder frontier construction";
      if (!ex.increasing || !ex.complexity || !ex.infinite_complement)
        throw std::logic_error("constructed exhaustion fails its own certificates");
      return ex;
    }
  }
  throw std::runtime_error("no principal spherical exhaustion found by depth 40 for " +
                           spec.str());
}

bool inverse_limit_check(const Exhaustion& ex, int levels) {
  if (levels < 1 || levels > static_cast<int>(ex.levels.size()))
    throw std::invalid_argument("level count out of range");
  std::vector<QuotientSpace> quotients;
  std::vector<std::vector<int>> maps;  // maps[i]: labels(i+1) -> labels(i)
  for (int i = 0; i < levels; ++i) quotients.push_back(quotient_space(ex.levels[i]));
  for (int i = 0; i + 1 < levels; ++i)
    maps.push_back(restriction_map(ex.levels[i], ex.levels[i + 1]));

  // Compatible threads, enumerated level by level.
  std::vector<std::vector<int>> threads;
  for (std::size_t x = 0; x < quotients[0].label_sets.size(); ++x)
    threads.push_back({static_cast<int>(x)});
  for (int i = 0; i + 1 < levels; ++i) {
    std::vector<std::vector<int>> extended;
    for (const auto& t : threads)
      for (std::size_t x = 0; x < quotients[i + 1].label_sets.size(); ++x)
        if (maps[i][x] == t.back()) {
          auto t2 = t;
          t2.push_back(static_cast<int>(x));
          extended.push_back(std::move(t2));
        }
    threads = std::move(extended);
  }

  const QuotientSpace& last = quotients[levels - 1];
  if (threads.size() != last.label_sets.size()) return false;

  // Terminal label sets partition the space.
  ClopenSet whole = empty_clopen(ex.spec);
  for (std::size_t i = 0; i < last.label_sets.size(); ++i) {
    for (std::size_t j = i + 1; j < last.label_sets.size(); ++j)
      if (!last.label_sets[i].intersect(last.label_sets[j]).empty()) return false;
    whole = whole.unite(last.label_sets[i]);
  }
  if (!whole.is_whole_space()) return false;

  // Match the cylinder classes at the final granularity: infinite classes are
  // exactly the boundary sides; finite classes decompose into punctures.
  int depth = ex.cylinder_depths[static_cast<std::size_t>(levels - 1)];
  if (depth < 0) {
    for (const ClopenSet& u : ex.levels[static_cast<std::size_t>(levels - 1)].outer)
      for (const std::string& t : u.antichain())
        depth = std::max(depth, static_cast<int>(t.size()));
  }
  const Sphere& top = ex.levels[static_cast<std::size_t>(levels - 1)];
  for (auto& [str, cnt] : points_at_depth(ex.spec, depth)) {
    ClopenSet cls = canonicalize(ex.spec, {str});
    if (cnt.is_infinite()) {
      bool found = false;
      for (const ClopenSet& u : top.outer)
        if (u == cls) found = true;
      if (!found) return false;
    } else {
      CountClass inside = CountClass::exactly(0);
      for (const ClopenSet& p : top.punctures)
        if (p.subset_of(cls)) inside += CountClass::exactly(1);
      for (const ClopenSet& u : top.outer)
        if (u.subset_of(cls)) inside += u.count();
      if (inside != cnt) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Link component analysis over bounded complexes

LinkComponentsReport link_components(const SpaceSpec& spec,
                                     const std::vector<ClopenSet>& sides, int depth) {
  LinkComponentsReport report;
  report.depth = depth;
  AtomSpace atoms = AtomSpace::build(spec, depth);
  const std::uint64_t full = atoms.universe();
  const bool finite_space = !count_space(spec).is_infinite();

  std::vector<std::uint64_t> side_masks;
  for (const ClopenSet& u : sides) {
    auto m = atoms.mask_of(u);
    if (!m) throw std::invalid_argument("side deeper than the bounded complex");
    side_masks.push_back(*m);
  }
  for (std::size_t i = 0; i < side_masks.size(); ++i)
    for (std::size_t j = i + 1; j < side_masks.size(); ++j)
      if (side_masks[i] & side_masks[j])
        throw std::invalid_argument("link analysis needs pairwise-disjoint sides");

  std::set<std::uint64_t> family_partitions;
  for (std::uint64_t m : side_masks)
    family_partitions.insert((m & 1) ? m : (full & ~m));

  // Bounded link-intersection vertices.
  std::vector<std::uint64_t> linkint;
  for (std::uint64_t m : enumerate_cut_masks(atoms)) {
    if (family_partitions.count(m)) continue;
    bool compat = true;
    for (std::uint64_t u : side_masks)
      if (crosses_mask(m, u, full)) {
        compat = false;
        break;
      }
    if (compat) linkint.push_back(m);
  }
  report.linkint_size = static_cast<int>(linkint.size());

  // Piece classification: a vertex belongs to side i when one of its halves
  // sits strictly inside that side; everything else is quotient-type.
  auto piece_of = [&](std::uint64_t m) {
    std::uint64_t halves[2] = {m, full & ~m};
    for (std::size_t i = 0; i < side_masks.size(); ++i)
      for (std::uint64_t h : halves)
        if (h && (h & ~side_masks[i]) == 0 && h != side_masks[i])
          return static_cast<int>(i);
    return -1;
  };

  // Union-find over the bounded vertices plus connecting witnesses one level
  // deeper, each a genuine cut validated by the crossing predicate.
  std::vector<Cut> witnesses;
  if (!finite_space) {
    std::vector<std::vector<int>> region_atoms(side_masks.size() + 1);
    for (int t = 0; t < atoms.size(); ++t) {
      int owner = static_cast<int>(side_masks.size());
      for (std::size_t i = 0; i < side_masks.size(); ++i)
        if (side_masks[i] >> t & 1) owner = static_cast<int>(i);
      region_atoms[static_cast<std::size_t>(owner)].push_back(t);
    }
    std::vector<Cut> family_cuts;
    for (std::uint64_t u : side_masks) family_cuts.push_back(Cut::from_side(atoms.clopen(u)));
    for (const auto& region : region_atoms) {
      if (region.size() < 2) continue;
      for (int a : region) {
        if (!atoms.counts()[static_cast<std::size_t>(a)].at_least(2)) continue;
        std::string half =
            first_split(spec, atoms.labels()[static_cast<std::size_t>(a)]) + "0";
        for (int c : region) {
          if (c == a) continue;
          Cut w = Cut::from_strings(spec, {half, atoms.labels()[static_cast<std::size_t>(c)]});
          if (!is_nonperipheral(w)) continue;
          bool compat = true;
          for (const Cut& f : family_cuts)
            if (w == f || crosses(w, f)) compat = false;
          if (compat) witnesses.push_back(w);
        }
      }
    }
    std::sort(witnesses.begin(), witnesses.end());
    witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
  }

  const std::size_t total = linkint.size() + witnesses.size();
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

  for (std::size_t i = 0; i < linkint.size(); ++i)
    for (std::size_t j = i + 1; j < linkint.size(); ++j)
      if (crosses_mask(linkint[i], linkint[j], full)) unite(i, j);
  if (!witnesses.empty()) {
    std::vector<Cut> linkint_cuts;
    for (std::uint64_t m : linkint) linkint_cuts.push_back(Cut::from_side(atoms.clopen(m)));
    for (std::size_t w = 0; w < witnesses.size(); ++w) {
      for (std::size_t i = 0; i < linkint.size(); ++i)
        if (crosses(witnesses[w], linkint_cuts[i])) unite(linkint.size() + w, i);
      for (std::size_t w2 = w + 1; w2 < witnesses.size(); ++w2)
        if (crosses(witnesses[w], witnesses[w2])) unite(linkint.size() + w, linkint.size() + w2);
    }
  }

  std::map<std::size_t, std::vector<std::size_t>> comps;  // root -> linkint members
  for (std::size_t i = 0; i < linkint.size(); ++i) comps[find(i)].push_back(i);
  report.component_count = static_cast<int>(comps.size());

  int core_components = 0;
  std::vector<std::uint64_t> core_masks;
  for (auto& [root, members] : comps) {
    bool all_quotient = true;
    for (std::size_t i : members)
      if (piece_of(linkint[i]) != -1) all_quotient = false;
    if (all_quotient) {
      ++core_components;
      core_masks.clear();
      for (std::size_t i : members) core_masks.push_back(linkint[i]);
    }
  }
  report.exactly_one_core = core_components == 1;
  if (report.exactly_one_core) {
    report.core_component_size = static_cast<int>(core_masks.size());
    CutGraph core = CutGraph::build(atoms, core_masks);
    report.core_opposite_max_clique = core.max_clique_size();
    report.core_vertices = core.vertices();
  }
  return report;
}

// ---------------------------------------------------------------------------
// Recognition

namespace {

// Adjacency witness inside the family: a bounded cut crossing exactly the two
// members (as partitions). Mask arithmetic when every member resolves at the
// working depth, the generic crossing predicate otherwise.
bool family_adjacency_complete(const SpaceSpec& spec, const std::vector<Cut>& cuts,
                               int depth) {
  const bool finite_space = !count_space(spec).is_infinite();
  const int working_depth = finite_space ? isolation_depth(spec) : depth;

  AtomSpace atoms = AtomSpace::build(spec, working_depth);
  const std::uint64_t full = atoms.universe();
  std::vector<std::uint64_t> member;
  bool masks_ok = true;
  for (const Cut& c : cuts) {
    auto m = atoms.mask_of(c.side(0));
    if (!m) {
      masks_ok = false;
      break;
    }
    member.push_back(*m);
  }

  auto same_partition = [&](std::size_t x, std::size_t y) { return cuts[x] == cuts[y]; };

  if (masks_ok) {
    std::vector<std::uint64_t> probes = enumerate_cut_masks(atoms);
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      for (std::size_t j = i + 1; j < cuts.size(); ++j) {
        if (same_partition(i, j)) continue;
        bool edge = false;
        for (std::uint64_t p : probes) {
          bool ok = true;
          for (std::size_t k = 0; k < cuts.size() && ok; ++k) {
            bool x = crosses_mask(p, member[k], full);
            bool want = (k == i || k == j) || same_partition(k, i) || same_partition(k, j);
            if (x != want) ok = false;
          }
          if (ok) {
            edge = true;
            break;
          }
        }
        if (!edge) return false;
      }
    }
    return true;
  }

  std::vector<Cut> probes = finite_space ? enumerate_cuts_finite(spec)
                                         : enumerate_cuts_bounded(spec, depth);
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    for (std::size_t j = i + 1; j < cuts.size(); ++j) {
      if (same_partition(i, j)) continue;
      bool edge = false;
      for (const Cut& p : probes) {
        bool ok = true;
        for (std::size_t k = 0; k < cuts.size() && ok; ++k) {
          bool x = crosses(p, cuts[k]);
          bool want = (k == i || k == j) || same_partition(k, i) || same_partition(k, j);
          if (x != want) ok = false;
        }
        if (ok) {
          edge = true;
          break;
        }
      }
      if (!edge) return false;
    }
  }
  return true;
}

}  // namespace

SphereRecognition recognize_sphere(const SpaceSpec& spec,
                                   const std::vector<ClopenSet>& sides, int depth) {
  SphereRecognition out;
  out.depth = depth;
  out.k = static_cast<int>(sides.size());

  if (!count_space(spec).is_infinite()) {
    // Finite spaces are decided by direct set arithmetic.
    try {
      Sphere s = make_sphere(spec, sides);
      out.ok = true;
      out.n = s.puncture_count();
    } catch (const std::exception& e) {
      out.failure = e.what();
    }
    return out;
  }

  std::vector<Cut> cuts;
  try {
    for (const ClopenSet& u : sides) {
      Cut c = Cut::from_side(u);
      if (!is_nonperipheral(c)) throw std::invalid_argument("peripheral side");
      cuts.push_back(c);
    }
  } catch (const std::exception&) {
    out.failure = "sides";
    return out;
  }

  if (!family_adjacency_complete(spec, cuts, depth)) {
    out.failure = "adjacency";
    return out;
  }
  if (out.k > 1) {
    for (const ClopenSet& u : sides)
      if (!u.count().is_infinite() || !u.complement().count().is_infinite()) {
        out.failure = "sides";
        return out;
      }
  }
  LinkComponentsReport links;
  try {
    links = link_components(spec, sides, depth);
  } catch (const std::invalid_argument&) {
    out.failure = "sides";
    return out;
  }
  out.components = links.component_count;
  if (links.component_count != out.k + 1 || !links.exactly_one_core) {
    out.failure = "components";
    return out;
  }
  out.clique = links.core_opposite_max_clique;
  out.n = out.clique - 1 + 4 - out.k;
  if (out.n < 0) {
    out.failure = "components";
    return out;
  }
  out.ok = true;
  return out;
}

TripleReport triple_condition_check(const Cut& a, const Cut& b, const Cut& c,
                                    int context_depth) {
  TripleReport report;
  const Cut* cuts[3] = {&a, &b, &c};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (crosses(*cuts[i], *cuts[j]))
        throw std::domain_error("triple condition needs pairwise-compatible cuts");

  int orientation[3] = {-1, -1, -1};
  for (int s0 = 0; s0 < 2 && !report.orientation_found; ++s0)
    for (int s1 = 0; s1 < 2 && !report.orientation_found; ++s1)
      for (int s2 = 0; s2 < 2 && !report.orientation_found; ++s2) {
        if (a.side(s0).intersect(b.side(s1)).empty() &&
            a.side(s0).intersect(c.side(s2)).empty() &&
            b.side(s1).intersect(c.side(s2)).empty()) {
          report.orientation_found = true;
          orientation[0] = s0;
          orientation[1] = s1;
          orientation[2] = s2;
        }
      }

  std::vector<Cut> family = {a, b, c};
  report.triangle = family_adjacency_complete(a.space(), family, context_depth);

  if (report.orientation_found) {
    ClopenSet inter = a.side(1 - orientation[0])
                          .intersect(b.side(1 - orientation[1]))
                          .intersect(c.side(1 - orientation[2]));
    report.triple_nonempty = !inter.empty();
  }
  return report;
}

InteriorComplex interior_complex(const Sphere& s, int depth) {
  AtomSpace atoms = AtomSpace::build(s.spec, depth);
  const std::uint64_t full = atoms.universe();
  std::vector<std::uint64_t> side_masks;
  for (const ClopenSet& u : s.outer) {
    auto m = atoms.mask_of(u);
    if (!m) throw std::invalid_argument("side deeper than the bounded complex");
    side_masks.push_back(*m);
  }
  std::set<std::uint64_t> boundary_partitions;
  for (std::uint64_t m : side_masks)
    boundary_partitions.insert((m & 1) ? m : (full & ~m));

  std::vector<std::uint64_t> interior;
  for (std::uint64_t m : enumerate_cut_masks(atoms)) {
    if (boundary_partitions.count(m)) continue;
    bool ok = true;
    for (std::uint64_t u : side_masks) {
      if ((m & u) && (u & ~m)) {
        ok = false;
        break;
      }
    }
    if (ok) interior.push_back(m);
  }

  InteriorComplex out;
  out.interior = CutGraph::build(atoms, interior);

  const int q = s.boundary_count() + s.puncture_count();
  FiniteComplex qc = finite_complex(q);
  out.quotient_complex = qc.graph;

  // Quotient points: boundary labels first, then punctures.
  for (std::uint64_t m : interior) {
    std::uint64_t qmask = 0;
    for (std::size_t i = 0; i < side_masks.size(); ++i)
      if ((side_masks[i] & ~m) == 0) qmask |= std::uint64_t(1) << i;
    ClopenSet side = atoms.clopen(m);
    for (std::size_t j = 0; j < s.punctures.size(); ++j)
      if (s.punctures[j].subset_of(side))
        qmask |= std::uint64_t(1) << (side_masks.size() + j);
    out.iso.push_back(qc.vertex_of_mask(qmask));
  }

  out.isomorphic = out.interior.size() == out.quotient_complex.size();
  if (out.isomorphic) {
    std::vector<bool> hit(static_cast<std::size_t>(out.quotient_complex.size()), false);
    for (int v : out.iso) {
      if (hit[static_cast<std::size_t>(v)]) out.isomorphic = false;
      hit[static_cast<std::size_t>(v)] = true;
    }
  }
  if (out.isomorphic) {
    for (int i = 0; i < out.interior.size() && out.isomorphic; ++i)
      for (int j = i + 1; j < out.interior.size(); ++j)
        if (out.interior.edge(i, j) != out.quotient_complex.edge(out.iso[static_cast<std::size_t>(i)], out.iso[static_cast<std::size_t>(j)])) {
          out.isomorphic = false;
          break;
        }
  }
  return out;
}

}  // namespace cutcx
