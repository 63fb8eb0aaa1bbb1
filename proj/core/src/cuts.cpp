#include "cutcx/cuts.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "cutcx/graph.hpp"
#include "cutcx/strings.hpp"

namespace cutcx {

Cut Cut::from_side(ClopenSet side) {
  ClopenSet other = side.complement();
  if (side.empty() || other.empty())
    throw std::invalid_argument("degenerate cut: side is empty or the whole space");
  Cut c;
  if (other < side) std::swap(side, other);
  c.sides_ = {std::move(side), std::move(other)};
  return c;
}

Cut Cut::from_strings(const SpaceSpec& spec, const std::vector<std::string>& side) {
  return from_side(canonicalize(spec, side));
}

bool is_nonperipheral(const Cut& c) {
  return c.side(0).count().at_least(2) && c.side(1).count().at_least(2);
}

bool is_outermost(const Cut& c) {
  return c.side(0).count() == CountClass::exactly(2) ||
         c.side(1).count() == CountClass::exactly(2);
}

bool crosses(const Cut& a, const Cut& b) {
  if (a.space() != b.space()) throw std::domain_error("cuts over different spaces");
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (a.side(i).intersect(b.side(j)).empty()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<std::uint64_t> enumerate_cut_masks(const AtomSpace& atoms) {
  const int m = atoms.size();
  if (m < 2) return {};
  if (m > 62) throw std::length_error("bounded enumeration limited to 62 atom classes");
  std::vector<std::uint64_t> out;
  const std::uint64_t top = std::uint64_t(1) << m;
  // One mask per partition: keep the side containing atom 0.
  for (std::uint64_t mask = 1; mask < top; mask += 2) {
    if (mask == top - 1) continue;
    if (atoms.nonperipheral(mask)) out.push_back(mask);
  }
  return out;
}

std::vector<Cut> enumerate_cuts_bounded(const SpaceSpec& spec, int depth) {
  AtomSpace atoms = AtomSpace::build(spec, depth);
  std::vector<Cut> cuts;
  for (std::uint64_t mask : enumerate_cut_masks(atoms))
    cuts.push_back(Cut::from_side(atoms.clopen(mask)));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

int isolation_depth(const SpaceSpec& spec) {
  CountClass total = count_space(spec);
  if (total.is_infinite())
    throw std::domain_error("isolation depth requires a finite spec");
  int depth = 1;
  while (points_at_depth(spec, depth).size() < total.value() && depth < 96) ++depth;
  return depth;
}

std::vector<Cut> enumerate_cuts_finite(const SpaceSpec& spec) {
  return enumerate_cuts_bounded(spec, isolation_depth(spec));
}

// ---------------------------------------------------------------------------
// Short paths, following the connectivity argument: two-point replacements in
// the finite case, an infinite pairwise intersection in the infinite case.

namespace {

// A compatible replacement with a two-point side, on a finite spec.
Cut two_point_companion(const Cut& c, const std::vector<ClopenSet>& points) {
  for (int s = 0; s < 2; ++s) {
    if (c.side(s).count() == CountClass::exactly(2)) return c;
  }
  // Pick two points inside one side.
  for (int s = 0; s < 2; ++s) {
    std::vector<ClopenSet> inside;
    for (const ClopenSet& p : points)
      if (p.subset_of(c.side(s))) inside.push_back(p);
    if (inside.size() >= 2)
      return Cut::from_side(inside[0].unite(inside[1]));
  }
  throw std::logic_error("non-peripheral cut without a two-point subside");
}

void push_step(std::vector<Cut>& path, const Cut& next) {
  if (path.empty() || !(path.back() == next)) path.push_back(next);
}

}  // namespace

std::vector<Cut> short_path(const Cut& a, const Cut& b) {
  if (a.space() != b.space()) throw std::domain_error("cuts over different spaces");
  if (!is_nonperipheral(a) || !is_nonperipheral(b))
    throw std::invalid_argument("short_path requires non-peripheral cuts");
  if (a == b) return {a};
  if (compatible(a, b)) return {a, b};

  const SpaceSpec& spec = a.space();
  CountClass total = count_space(spec);

  if (total.is_infinite()) {
    // Midpoint: an infinite pairwise intersection is a cut compatible with
    // both, since its complement keeps the other three quadrants.
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        ClopenSet quad = a.side(i).intersect(b.side(j));
        if (quad.count().is_infinite()) {
          Cut mid = Cut::from_side(quad);
          return {a, mid, b};
        }
      }
    }
    throw std::logic_error("crossing cuts on an infinite spec with no infinite quadrant");
  }

  if (!total.at_least(5))
    throw std::invalid_argument("short_path unsupported on finite specs with < 5 points");

  // Point classes of the finite spec.
  std::vector<ClopenSet> points;
  {
    int depth = 1;
    while (points_at_depth(spec, depth).size() < total.value() && depth < 64) ++depth;
    for (auto& [s, c] : points_at_depth(spec, depth))
      points.push_back(canonicalize(spec, {s}));
  }

  Cut a2 = two_point_companion(a, points);
  Cut b2 = two_point_companion(b, points);

  std::vector<Cut> path;
  push_step(path, a);
  push_step(path, a2);
  if (a2 == b2 || compatible(a2, b2)) {
    push_step(path, b2);
    push_step(path, b);
    return path;
  }
  // Crossing two-point sides share one point; their union has three points
  // and determines a cut compatible with both.
  ClopenSet u2a = a2.side(0).count() == CountClass::exactly(2) ? a2.side(0) : a2.side(1);
  ClopenSet u2b = b2.side(0).count() == CountClass::exactly(2) ? b2.side(0) : b2.side(1);
  Cut bridge = Cut::from_side(u2a.unite(u2b));
  push_step(path, bridge);
  push_step(path, b2);
  push_step(path, b);
  return path;
}

// ---------------------------------------------------------------------------
// Link join structure

std::pair<SpaceSpec, SpaceSpec> join_split(const SpaceSpec& spec, const Cut& c) {
  if (c.space() != spec) throw std::domain_error("cut over a different space");
  if (!is_nonperipheral(c)) throw std::domain_error("join_split needs a non-peripheral cut");
  auto collapse = [&](const ClopenSet& side) {
    return SpaceSpec::union_of(SpaceSpec::subspace(spec, side), SpaceSpec::finite(1));
  };
  return {collapse(c.side(0)), collapse(c.side(1))};
}

LinkJoinReport verify_link_join(const SpaceSpec& spec, const Cut& c, int depth) {
  LinkJoinReport report;
  AtomSpace atoms = AtomSpace::build(spec, depth);
  auto cmask_opt = atoms.mask_of(c.side(0));
  if (!cmask_opt) {
    report.detail = "cut is deeper than the requested depth";
    return report;
  }
  const std::uint64_t cmask = *cmask_opt;
  const std::uint64_t universe = atoms.universe();

  // Link vertices, each normalized to the side contained in one side of c.
  struct LinkVertex {
    std::uint64_t inner;  // side inside c.side(factor)
    int factor;           // 0 or 1
    Cut cut;
  };
  std::vector<LinkVertex> link;
  for (std::uint64_t m : enumerate_cut_masks(atoms)) {
    if (m == cmask || (~m & universe) == cmask) continue;
    std::uint64_t sides[2] = {m, ~m & universe};
    std::uint64_t cs[2] = {cmask, ~cmask & universe};
    bool placed = false;
    for (int s = 0; s < 2 && !placed; ++s) {
      for (int f = 0; f < 2 && !placed; ++f) {
        if ((sides[s] & ~cs[f]) == 0) {  // side fits inside factor f
          link.push_back({sides[s], f, Cut::from_side(atoms.clopen(m))});
          placed = true;
        }
      }
    }
  }
  report.link_size = static_cast<int>(link.size());

  // Join property: every cross-factor pair is compatible.
  for (std::size_t i = 0; i < link.size(); ++i) {
    for (std::size_t j = i + 1; j < link.size(); ++j) {
      if (link[i].factor == link[j].factor) continue;
      if (crosses(link[i].cut, link[j].cut)) {
        report.detail = "cross-factor pair crosses: " + link[i].cut.label() + " / " +
                        link[j].cut.label();
        return report;
      }
    }
  }

  // Each factor bijects with the bounded complex of its collapsed space,
  // matching edges.
  auto factors = join_split(spec, c);
  const SpaceSpec factor_spec[2] = {factors.first, factors.second};
  for (int f = 0; f < 2; ++f) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < link.size(); ++i)
      if (link[i].factor == f) members.push_back(i);
    report.factor_sizes[f] = static_cast<int>(members.size());

    // Map a link vertex into the collapsed space: its inner side keeps its
    // strings under the subspace prefix "0".
    std::vector<Cut> mapped;
    for (std::size_t i : members) {
      std::vector<std::string> raw;
      for (int bit = 0; bit < atoms.size(); ++bit)
        if (link[i].inner >> bit & 1) raw.push_back("0" + atoms.labels()[bit]);
      mapped.push_back(Cut::from_strings(factor_spec[f], raw));
    }

    std::vector<Cut> expected = enumerate_cuts_bounded(factor_spec[f], depth + 1);
    std::vector<Cut> sorted_mapped = mapped;
    std::sort(sorted_mapped.begin(), sorted_mapped.end());
    if (sorted_mapped != expected) {
      report.detail = "factor " + std::to_string(f) + " vertex sets differ: mapped " +
                      std::to_string(sorted_mapped.size()) + ", collapsed complex " +
                      std::to_string(expected.size());
      return report;
    }
    // Edge agreement within the factor.
    for (std::size_t x = 0; x < members.size(); ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        bool e_here = !crosses(link[members[x]].cut, link[members[y]].cut);
        bool e_there = !crosses(mapped[x], mapped[y]);
        if (e_here != e_there) {
          report.detail = "edge mismatch in factor " + std::to_string(f);
          return report;
        }
      }
    }
  }

  report.ok = true;
  return report;
}

}  // namespace cutcx
