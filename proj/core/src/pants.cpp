#include "cutcx/pants.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
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

}  // namespace

PantsDecomposition make_pants(SpaceSpec spec, std::vector<Cut> cuts) {
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (cuts[i].space() != spec) throw std::domain_error("cut over a different space");
    if (!is_nonperipheral(cuts[i]))
      throw std::invalid_argument("pants members must be non-peripheral");
    for (std::size_t j = i + 1; j < cuts.size(); ++j) {
      if (cuts[i] == cuts[j]) throw std::invalid_argument("duplicate pants member");
      if (crosses(cuts[i], cuts[j]))
        throw std::invalid_argument("pants members must be pairwise compatible");
    }
  }
  return PantsDecomposition{std::move(spec), std::move(cuts)};
}

PantsDecomposition standard_cantor_pants(int max_len) {
  if (max_len < 1) throw std::invalid_argument("standard pants need depth >= 1");
  SpaceSpec cantor = SpaceSpec::cantor();
  std::vector<Cut> cuts;
  std::vector<std::string> frontier = {"0", "1"};
  for (int d = 1; d <= max_len; ++d) {
    for (const std::string& s : frontier) cuts.push_back(Cut::from_strings(cantor, {s}));
    if (d < max_len) {
      std::vector<std::string> next;
      for (const std::string& s : frontier) {
        next.push_back(s + "0");
        next.push_back(s + "1");
      }
      frontier = std::move(next);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return PantsDecomposition{cantor, std::move(cuts)};
}

PantsDecomposition restrict_pants(const SpaceSpec& spec, const PantsDecomposition& pants) {
  std::vector<Cut> restricted;
  for (const Cut& c : pants.cuts) {
    // Reinterpret one side's cylinders over the new spec; the other side is
    // recomputed as its complement there.
    try {
      Cut r = Cut::from_strings(spec, c.side(0).antichain());
      if (is_nonperipheral(r)) restricted.push_back(r);
    } catch (const std::invalid_argument&) {
      // degenerate restriction: one part misses the subspace entirely
    }
  }
  std::sort(restricted.begin(), restricted.end());
  restricted.erase(std::unique(restricted.begin(), restricted.end()), restricted.end());
  return PantsDecomposition{spec, std::move(restricted)};
}

std::vector<int> crossing_set(const Cut& c, const PantsDecomposition& pants) {
  std::vector<int> out;
  for (std::size_t i = 0; i < pants.cuts.size(); ++i)
    if (crosses(c, pants.cuts[i])) out.push_back(static_cast<int>(i));
  return out;
}

PantsBoundedReport verify_pants_bounded(const PantsDecomposition& pants, int probe_depth) {
  PantsBoundedReport report;
  report.probe_depth = probe_depth;
  report.members = static_cast<int>(pants.cuts.size());

  report.pairwise_compatible = true;
  for (std::size_t i = 0; i < pants.cuts.size() && report.pairwise_compatible; ++i)
    for (std::size_t j = i + 1; j < pants.cuts.size(); ++j)
      if (crosses(pants.cuts[i], pants.cuts[j])) {
        report.pairwise_compatible = false;
        break;
      }

  AtomSpace atoms = AtomSpace::build(pants.spec, probe_depth);
  const std::uint64_t full = atoms.universe();

  // Members that resolve at probe depth keep a mask; deeper members must sit
  // inside a single class, which makes them compatible with every probe.
  std::vector<std::uint64_t> member_masks;
  std::vector<std::uint64_t> member_partitions;  // normalized, for membership test
  for (const Cut& c : pants.cuts) {
    auto m = atoms.mask_of(c.side(0));
    if (m) {
      member_masks.push_back(*m);
      member_partitions.push_back((*m & 1) ? *m : (full & ~*m));
      continue;
    }
    bool inside_class = false;
    for (int i = 0; i < atoms.size() && !inside_class; ++i) {
      ClopenSet cls = canonicalize(pants.spec, {atoms.labels()[i]});
      if (c.side(0).subset_of(cls) || c.side(1).subset_of(cls)) inside_class = true;
    }
    if (!inside_class)
      throw std::logic_error("pants member neither resolves at probe depth nor sits in a class");
  }

  report.every_probe_crossed = true;
  for (std::uint64_t probe : enumerate_cut_masks(atoms)) {
    std::uint64_t norm = (probe & 1) ? probe : (full & ~probe);
    if (std::find(member_partitions.begin(), member_partitions.end(), norm) !=
        member_partitions.end())
      continue;
    ++report.probes_checked;
    int crossings = 0;
    for (std::uint64_t m : member_masks)
      if (crosses_mask(probe, m, full)) ++crossings;
    if (crossings == 0 && report.every_probe_crossed) {
      report.every_probe_crossed = false;
      report.first_uncrossed = atoms.clopen(probe).str();
    }
    report.max_crossing_set = std::max(report.max_crossing_set, crossings);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Adjacency

namespace {

bool witness_for_pair(const std::vector<std::uint64_t>& member_masks, std::uint64_t full,
                      std::uint64_t probe, int i, int j) {
  for (std::size_t k = 0; k < member_masks.size(); ++k) {
    bool x = crosses_mask(probe, member_masks[k], full);
    if (x != (static_cast<int>(k) == i || static_cast<int>(k) == j)) return false;
  }
  return true;
}

}  // namespace

AdjacencyOutcome adjacent(const PantsDecomposition& pants, int i, int j, int search_depth) {
  if (i == j) throw std::invalid_argument("adjacency needs two distinct members");
  const int n = static_cast<int>(pants.cuts.size());
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("member index out of range");

  const bool finite = !count_space(pants.spec).is_infinite();
  AdjacencyOutcome out;
  out.search_depth = search_depth;

  std::vector<Cut> probes = finite ? enumerate_cuts_finite(pants.spec)
                                   : enumerate_cuts_bounded(pants.spec, search_depth);
  for (const Cut& probe : probes) {
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) {
      bool x = crosses(probe, pants.cuts[k]);
      if (x != (k == i || k == j)) ok = false;
    }
    if (ok) {
      out.kind = AdjacencyOutcome::Kind::Witness;
      out.witness = probe;
      return out;
    }
  }
  out.kind = finite ? AdjacencyOutcome::Kind::NoneExact : AdjacencyOutcome::Kind::UnknownAtDepth;
  return out;
}

CutGraph adjacency_graph_finite(const PantsDecomposition& pants) {
  if (count_space(pants.spec).is_infinite())
    throw std::domain_error("exact adjacency graphs need a finite spec");
  const int n = static_cast<int>(pants.cuts.size());
  BitMatrix adj(n);
  std::vector<Cut> all = enumerate_cuts_finite(pants.spec);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool edge = false;
      for (const Cut& probe : all) {
        bool ok = true;
        for (int k = 0; k < n && ok; ++k) {
          bool x = crosses(probe, pants.cuts[k]);
          if (x != (k == i || k == j)) ok = false;
        }
        if (ok) {
          edge = true;
          break;
        }
      }
      adj.set_sym(i, j, edge);
    }
  }
  return CutGraph::from_adjacency(pants.cuts, std::move(adj));
}

std::vector<PantsDecomposition> enumerate_pants_finite(int n) {
  if (n < 5 || n > 8)
    throw std::invalid_argument("pants enumeration supported for 5 <= n <= 8");
  FiniteComplex fc = finite_complex(n);
  std::vector<PantsDecomposition> out;
  for (const auto& clique : fc.graph.maximal_cliques()) {
    std::vector<Cut> cuts;
    for (int v : clique) cuts.push_back(fc.graph.vertex(v));
    out.push_back(PantsDecomposition{fc.spec, std::move(cuts)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Peripheral pairs

bool is_peripheral_pair(const Cut& a, const Cut& b) {
  if (a == b) throw std::invalid_argument("peripheral pair needs distinct cuts");
  if (crosses(a, b)) throw std::domain_error("peripheral pair needs compatible cuts");
  int singletons = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (a.side(i).intersect(b.side(j)).count() == CountClass::exactly(1)) ++singletons;
  return singletons == 1;
}

int peripheral_pair_via_links(const CutGraph& full_complex, const Cut& a, const Cut& b) {
  if (a == b) throw std::invalid_argument("peripheral pair needs distinct cuts");
  if (crosses(a, b)) throw std::domain_error("peripheral pair needs compatible cuts");
  if (is_outermost(a) || is_outermost(b))
    throw std::invalid_argument("link criterion assumes neither cut is outermost");
  auto ia = full_complex.index_of(a);
  auto ib = full_complex.index_of(b);
  if (!ia || !ib) throw std::domain_error("cut missing from the complex");
  CutGraph linkint = full_complex.link_intersection({*ia, *ib});
  return linkint.opposite().component_count();
}

// ---------------------------------------------------------------------------
// Valence sweeps over all pants decompositions of Finite(n)

namespace {

struct MaskSweep {
  int n = 0;
  std::uint64_t full = 0;
  std::vector<std::uint64_t> masks;        // all cut sides, bit0-normalized
  std::vector<std::vector<int>> cliques;   // pants decompositions as index lists

  bool outermost(std::uint64_t m) const {
    return std::popcount(m) == 2 || std::popcount(full & ~m) == 2;
  }

  // Adjacency of members i, j inside the clique: some cut crosses exactly them.
  bool adjacent_in(const std::vector<int>& clique, int i, int j) const {
    for (std::uint64_t probe : masks) {
      bool ok = true;
      for (std::size_t k = 0; k < clique.size() && ok; ++k) {
        bool x = crosses_mask(probe, masks[static_cast<std::size_t>(clique[k])], full);
        if (x != (clique[k] == i || clique[k] == j)) ok = false;
      }
      if (ok) return true;
    }
    return false;
  }

  std::vector<int> valences(const std::vector<int>& clique) const {
    std::vector<int> val(clique.size(), 0);
    for (std::size_t x = 0; x < clique.size(); ++x)
      for (std::size_t y = x + 1; y < clique.size(); ++y)
        if (adjacent_in(clique, clique[x], clique[y])) {
          ++val[x];
          ++val[y];
        }
    return val;
  }
};

MaskSweep build_sweep(int n) {
  FiniteComplex fc = finite_complex(n);
  MaskSweep s;
  s.n = n;
  s.full = fc.full_mask();
  s.masks = fc.side_masks;
  for (const auto& clique : fc.graph.maximal_cliques()) s.cliques.push_back(clique);
  return s;
}

}  // namespace

ValenceCriterionReport valence_criterion_check(int n) {
  if (n < 6 || n > 8) throw std::invalid_argument("valence sweep supported for 6 <= n <= 8");
  MaskSweep s = build_sweep(n);
  ValenceCriterionReport report;
  report.n = n;
  report.decompositions = static_cast<int>(s.cliques.size());

  std::vector<int> max_valence(s.masks.size(), 0);
  report.valence_at_most_two = true;
  for (const auto& clique : s.cliques) {
    std::vector<int> val = s.valences(clique);
    for (std::size_t x = 0; x < clique.size(); ++x) {
      auto idx = static_cast<std::size_t>(clique[x]);
      max_valence[idx] = std::max(max_valence[idx], val[x]);
      if (val[x] > 2) report.valence_at_most_two = false;
    }
  }

  report.outermost_iff_low_valence = true;
  report.biconditional_fails = false;
  for (std::size_t v = 0; v < s.masks.size(); ++v) {
    bool outer = s.outermost(s.masks[v]);
    bool low = max_valence[v] <= 2;
    if (outer != low) report.outermost_iff_low_valence = false;
    if (!outer && low) report.biconditional_fails = true;
  }
  return report;
}

ValenceOneReport valence_one_check(int n) {
  if (n < 7 || n > 8) throw std::invalid_argument("valence-one sweep supported for n = 7, 8");
  MaskSweep s = build_sweep(n);
  ValenceOneReport report;
  report.n = n;
  report.decompositions = static_cast<int>(s.cliques.size());
  report.holds = true;

  auto singleton_meet = [&](std::uint64_t a, std::uint64_t b) {
    int count = 0;
    std::uint64_t sa[2] = {a, s.full & ~a};
    std::uint64_t sb[2] = {b, s.full & ~b};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (std::popcount(sa[i] & sb[j]) == 1) ++count;
    return count == 1;
  };

  for (const auto& clique : s.cliques) {
    std::vector<int> val = s.valences(clique);
    for (std::size_t x = 0; x < clique.size(); ++x) {
      std::uint64_t mx = s.masks[static_cast<std::size_t>(clique[x])];
      if (!s.outermost(mx)) continue;
      bool in_pair = false;
      for (std::size_t y = 0; y < clique.size() && !in_pair; ++y) {
        if (y == x) continue;
        if (singleton_meet(mx, s.masks[static_cast<std::size_t>(clique[y])])) in_pair = true;
      }
      if (!in_pair) continue;
      ++report.qualifying;
      if (val[x] != 1) report.holds = false;
    }
  }
  return report;
}

}  // namespace cutcx
