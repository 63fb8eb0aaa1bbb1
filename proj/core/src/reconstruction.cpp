#include "cutcx/reconstruction.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cutcx/cuts.hpp"

namespace cutcx {

namespace {

std::uint64_t permute_mask(std::uint64_t mask, const std::vector<int>& perm) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (mask >> i & 1) out |= std::uint64_t(1) << perm[i];
  return out;
}

void check_point_perm(const std::vector<int>& perm, int n) {
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("point permutation has the wrong size");
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("not a permutation of the point set");
    seen[v] = true;
  }
}

}  // namespace

int FiniteComplex::vertex_of_mask(std::uint64_t side) const {
  std::uint64_t norm = (side & 1) ? side : (full_mask() & ~side);
  auto it = std::lower_bound(mask_index.begin(), mask_index.end(),
                             std::make_pair(norm, 0));
  if (it == mask_index.end() || it->first != norm)
    throw std::invalid_argument("mask does not name a vertex of the complex");
  return it->second;
}

FiniteComplex finite_complex(int n) {
  if (n < 4) throw std::invalid_argument("cut complexes are empty below four points");
  FiniteComplex fc;
  fc.n = n;
  fc.spec = SpaceSpec::finite(n);
  fc.atoms = AtomSpace::build(fc.spec, n - 1);
  if (fc.atoms.size() != n) throw std::logic_error("point classes do not match n");

  std::vector<std::uint64_t> masks = enumerate_cut_masks(fc.atoms);
  std::vector<Cut> cuts;
  cuts.reserve(masks.size());
  for (std::uint64_t m : masks) cuts.push_back(Cut::from_side(fc.atoms.clopen(m)));
  // Canonical vertex order, masks kept aligned.
  std::vector<std::size_t> idx(cuts.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return cuts[a] < cuts[b]; });
  std::vector<Cut> sorted_cuts;
  for (std::size_t i : idx) {
    sorted_cuts.push_back(cuts[i]);
    fc.side_masks.push_back(masks[i]);
  }
  fc.graph = CutGraph::build(fc.atoms, fc.side_masks);
  fc.graph = CutGraph::from_adjacency(std::move(sorted_cuts), fc.graph.adjacency());
  for (std::size_t i = 0; i < fc.side_masks.size(); ++i)
    fc.mask_index.emplace_back(fc.side_masks[i], static_cast<int>(i));
  std::sort(fc.mask_index.begin(), fc.mask_index.end());
  return fc;
}

std::vector<int> induced_automorphism(const std::vector<int>& point_perm,
                                      const FiniteComplex& fc) {
  check_point_perm(point_perm, fc.n);
  std::vector<int> out(fc.side_masks.size());
  for (std::size_t v = 0; v < fc.side_masks.size(); ++v)
    out[v] = fc.vertex_of_mask(permute_mask(fc.side_masks[v], point_perm));
  return out;
}

namespace {

// The side with exactly two points, or 0 when the cut is not outermost.
std::uint64_t small_side(const FiniteComplex& fc, int vertex) {
  std::uint64_t m = fc.side_masks[static_cast<std::size_t>(vertex)];
  if (std::popcount(m) == 2) return m;
  std::uint64_t other = fc.full_mask() & ~m;
  if (std::popcount(other) == 2) return other;
  return 0;
}

int locate_point(const FiniteComplex& from, const FiniteComplex& to,
                 const std::vector<int>& iso, int a, int b, int c) {
  const std::uint64_t pa = std::uint64_t(1) << a;
  const std::uint64_t pb = std::uint64_t(1) << b;
  const std::uint64_t pc = std::uint64_t(1) << c;
  int v1 = from.vertex_of_mask(pa | pb);
  int v2 = from.vertex_of_mask(pa | pc);
  std::uint64_t s1 = small_side(to, iso[v1]);
  std::uint64_t s2 = small_side(to, iso[v2]);
  if (s1 == 0 || s2 == 0)
    throw std::invalid_argument("invalid isomorphism: outermost image not outermost");
  std::uint64_t inter = s1 & s2;
  if (std::popcount(inter) != 1)
    throw std::invalid_argument("invalid isomorphism: witness small sides do not meet in one point");
  return std::countr_zero(inter);
}

}  // namespace

std::vector<int> reconstruct(const FiniteComplex& from, const FiniteComplex& to,
                             const std::vector<int>& iso) {
  if (from.n != to.n)
    throw std::invalid_argument("complex dimensions force equal point counts");
  const int n = from.n;
  if (static_cast<int>(iso.size()) != from.graph.size())
    throw std::invalid_argument("vertex map has the wrong size");
  {
    std::vector<bool> seen(iso.size(), false);
    for (int v : iso) {
      if (v < 0 || v >= to.graph.size() || seen[v])
        throw std::invalid_argument("vertex map is not a bijection");
      seen[v] = true;
    }
    for (int i = 0; i < from.graph.size(); ++i)
      for (int j = i + 1; j < from.graph.size(); ++j)
        if (from.graph.edge(i, j) != to.graph.edge(iso[i], iso[j]))
          throw std::invalid_argument("invalid isomorphism: edges not preserved");
  }

  std::vector<int> f(n, -1);
  if (n == 4) {
    // Basepoint convention: point 0 maps to point 0; the three cuts are the
    // two-point sides through the basepoint.
    f[0] = 0;
    for (int a = 1; a < 4; ++a) {
      int v = from.vertex_of_mask(1 | (std::uint64_t(1) << a));
      std::uint64_t img = to.side_masks[static_cast<std::size_t>(iso[v])];
      if (!(img & 1) || std::popcount(img) != 2)
        throw std::invalid_argument("invalid isomorphism on the four-point complex");
      f[a] = std::countr_zero(img & ~std::uint64_t(1));
    }
  } else {
    for (int a = 0; a < n; ++a) {
      int b = (a == 0) ? 1 : 0;
      int c = (a <= 1) ? 2 : 1;
      int a1 = locate_point(from, to, iso, a, b, c);
      // Witness independence: a second pair must land on the same point.
      int c2 = c + 1;
      while (c2 == a || c2 == b || c2 == c) ++c2;
      if (c2 >= n) throw std::logic_error("no second witness available");
      int a2 = locate_point(from, to, iso, a, b, c2);
      if (a1 != a2)
        throw std::invalid_argument("invalid isomorphism: witness pairs disagree");
      f[a] = a1;
    }
  }
  std::vector<bool> seen(n, false);
  for (int v : f) {
    if (v < 0 || seen[v])
      throw std::invalid_argument("invalid isomorphism: reconstructed map not a bijection");
    seen[v] = true;
  }
  return f;
}

bool verify_geometric(const FiniteComplex& fc, const std::vector<int>& iso,
                      const std::vector<int>& point_bijection) {
  return induced_automorphism(point_bijection, fc) == iso;
}

std::vector<std::vector<int>> kernel_of_action(int n) {
  FiniteComplex fc = finite_complex(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> identity_map(fc.graph.size());
  std::iota(identity_map.begin(), identity_map.end(), 0);
  std::vector<std::vector<int>> kernel;
  do {
    if (induced_automorphism(perm, fc) == identity_map) kernel.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return kernel;
}

// ---------------------------------------------------------------------------
// Stabilizer family

StabilizerCheck stabilizer_check(int n, std::uint64_t k_points, std::uint64_t u_points) {
  if (n < 5 || n > 12) throw std::invalid_argument("stabilizer check supported for 5 <= n <= 12");
  const std::uint64_t full = (std::uint64_t(1) << n) - 1;
  if ((k_points & ~u_points) || !(k_points) || (u_points & ~full) || u_points == full)
    throw std::invalid_argument("need nonempty K inside proper U");

  FiniteComplex fc = finite_complex(n);
  StabilizerCheck out;
  std::vector<std::uint64_t> family;

  const int ksize = std::popcount(k_points);
  const bool k_cut_ok = ksize >= 2 && ksize <= n - 2;
  const int complexity = k_cut_ok ? 1 + (n - ksize) : 0;

  if (k_cut_ok) {
    out.sphere_based = true;
    family.push_back(k_points);
    // Interior cuts of the sphere with outer side K: cuts not splitting K.
    for (std::uint64_t m : fc.side_masks) {
      if (m == k_points || m == (full & ~k_points)) continue;
      bool splits_k = (m & k_points) && (k_points & ~m);
      if (!splits_k) family.push_back(m);
    }
  }
  if (!k_cut_ok || complexity < 5) {
    // One peripheral pair per point of K: split the rest into a two-point
    // side and its complement, pinning the point as the leftover singleton.
    out.added_peripheral_pairs = true;
    for (int x = 0; x < n; ++x) {
      if (!(k_points >> x & 1)) continue;
      std::vector<int> rest;
      for (int i = 0; i < n; ++i)
        if (i != x) rest.push_back(i);
      std::uint64_t a = (std::uint64_t(1) << rest[0]) | (std::uint64_t(1) << rest[1]);
      std::uint64_t b = full & ~a & ~(std::uint64_t(1) << x);
      family.push_back(a);
      family.push_back(b);
    }
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  out.cut_masks = family;
  for (std::uint64_t m : family) out.cuts.push_back(Cut::from_side(fc.atoms.clopen(m)));

  // Exhaustive verification: fixing every cut of the family forces K into U.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  out.verified = true;
  do {
    bool fixes_all = true;
    for (std::uint64_t m : family) {
      std::uint64_t img = permute_mask(m, perm);
      if (img != m && img != (full & ~m)) {
        fixes_all = false;
        break;
      }
    }
    if (fixes_all && (permute_mask(k_points, perm) & ~u_points)) {
      out.verified = false;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace cutcx
