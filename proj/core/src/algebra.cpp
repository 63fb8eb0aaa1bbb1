#include "cutcx/algebra.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace cutcx {

namespace {

void check_same_algebra(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.atoms != b.atoms)
    throw std::domain_error("algebra elements belong to different algebras");
}

// The cylinder isolating point i of Finite(n): i ones then a zero (the final
// point may drop the zero; canonicalization settles the form).
std::string finite_point_string(int i) { return std::string(i, '1') + "0"; }

}  // namespace

FiniteBooleanAlgebra::FiniteBooleanAlgebra(int atom_count) : atom_count_(atom_count) {
  if (atom_count < 1 || atom_count > 62)
    throw std::invalid_argument("atom count must be in [1, 62]");
}

AlgebraElement FiniteBooleanAlgebra::atom(int i) const {
  if (i < 0 || i >= atom_count_) throw std::invalid_argument("atom index out of range");
  return {atom_count_, std::uint64_t(1) << i};
}

AlgebraElement FiniteBooleanAlgebra::element(std::uint64_t mask) const {
  if (mask > full_mask()) throw std::invalid_argument("element mask out of range");
  return {atom_count_, mask};
}

AlgebraElement FiniteBooleanAlgebra::element_from_atoms(
    const std::vector<int>& atom_indices) const {
  std::uint64_t mask = 0;
  for (int i : atom_indices) {
    if (i < 0 || i >= atom_count_) throw std::invalid_argument("atom index out of range");
    mask |= std::uint64_t(1) << i;
  }
  return {atom_count_, mask};
}

AlgebraElement meet(const AlgebraElement& a, const AlgebraElement& b) {
  check_same_algebra(a, b);
  return {a.atoms, a.mask & b.mask};
}

AlgebraElement join(const AlgebraElement& a, const AlgebraElement& b) {
  check_same_algebra(a, b);
  return {a.atoms, a.mask | b.mask};
}

AlgebraElement complement_of(const AlgebraElement& a) {
  std::uint64_t full = (std::uint64_t(1) << a.atoms) - 1;
  return {a.atoms, full & ~a.mask};
}

bool leq(const AlgebraElement& a, const AlgebraElement& b) {
  check_same_algebra(a, b);
  return (a.mask & ~b.mask) == 0;
}

bool is_atom(const AlgebraElement& a) { return std::popcount(a.mask) == 1; }

std::vector<AlgebraElement> atoms(const FiniteBooleanAlgebra& b) {
  std::vector<AlgebraElement> out;
  out.reserve(b.atom_count());
  for (int i = 0; i < b.atom_count(); ++i) out.push_back(b.atom(i));
  return out;
}

std::vector<int> atom_indices(const AlgebraElement& a) {
  std::vector<int> out;
  for (int i = 0; i < a.atoms; ++i)
    if (a.mask >> i & 1) out.push_back(i);
  return out;
}

bool Ultrafilter::contains(const AlgebraElement& a) const {
  if (a.atoms != atoms) throw std::domain_error("element from a different algebra");
  return (a.mask >> atom_index) & 1;
}

std::vector<Ultrafilter> ultrafilters(const FiniteBooleanAlgebra& b) {
  std::vector<Ultrafilter> out;
  out.reserve(b.atom_count());
  for (int i = 0; i < b.atom_count(); ++i) out.push_back({b.atom_count(), i});
  return out;
}

Ultrafilter extend_filter(const FiniteBooleanAlgebra& b, const AlgebraElement& generator) {
  if (!b.owns(generator)) throw std::domain_error("generator from a different algebra");
  if (generator.mask == 0)
    throw std::invalid_argument("the filter generated by 0 is improper");
  return {b.atom_count(), std::countr_zero(generator.mask)};
}

ClopenSet StoneDual::eta(const AlgebraElement& a) const {
  if (!algebra.owns(a)) throw std::domain_error("element from a different algebra");
  std::vector<std::string> raw;
  for (int i = 0; i < algebra.atom_count(); ++i)
    if (a.mask >> i & 1) raw.push_back(finite_point_string(i));
  return canonicalize(space, raw);
}

AlgebraElement StoneDual::eta_inverse(const ClopenSet& u) const {
  if (u.space() != space) throw std::domain_error("clopen set over a different space");
  std::uint64_t mask = 0;
  for (int i = 0; i < algebra.atom_count(); ++i) {
    CountClass c = u.intersect(canonicalize(space, {finite_point_string(i)})).count();
    if (c.nonzero()) mask |= std::uint64_t(1) << i;
  }
  AlgebraElement a = algebra.element(mask);
  if (eta(a) != u) throw std::domain_error("clopen set is not in the image of eta");
  return a;
}

StoneDual stone_dual(const FiniteBooleanAlgebra& b) {
  return StoneDual{b, SpaceSpec::finite(b.atom_count()), ultrafilters(b)};
}

ClopenAlgebra clopen_algebra(const SpaceSpec& s) {
  CountClass total = count_space(s);
  if (total.is_infinite())
    throw std::domain_error("clopen algebra materialized only for finite spaces");
  if (total.value() == 0) throw std::domain_error("empty space has no Stone dual here");

  // Refine cylinder classes until every class is a single point.
  std::vector<ClopenSet> points;
  int depth = 1;
  for (;;) {
    auto classes = points_at_depth(s, depth);
    bool all_single = true;
    for (const auto& [str, cnt] : classes)
      if (cnt != CountClass::exactly(1)) all_single = false;
    if (all_single) {
      for (const auto& [str, cnt] : classes) points.push_back(canonicalize(s, {str}));
      break;
    }
    if (++depth > 64) throw std::logic_error("point separation exceeded depth cap");
  }
  std::sort(points.begin(), points.end());
  return ClopenAlgebra{s, FiniteBooleanAlgebra(static_cast<int>(points.size())),
                       std::move(points)};
}

ClopenSet ClopenAlgebra::realize(const AlgebraElement& a) const {
  if (!algebra.owns(a)) throw std::domain_error("element from a different algebra");
  ClopenSet out = empty_clopen(space);
  for (int i = 0; i < algebra.atom_count(); ++i)
    if (a.mask >> i & 1) out = out.unite(point_sets[i]);
  return out;
}

bool verify_epsilon(const SpaceSpec& s) {
  ClopenAlgebra omega = clopen_algebra(s);
  const int n = omega.algebra.atom_count();
  // epsilon sends each ultrafilter to the total intersection of its members.
  std::vector<bool> hit(n, false);
  for (const Ultrafilter& w : ultrafilters(omega.algebra)) {
    ClopenSet inter = whole_space(s);
    for (std::uint64_t m = 0; m <= omega.algebra.full_mask(); ++m) {
      AlgebraElement a = omega.algebra.element(m);
      if (w.contains(a)) inter = inter.intersect(omega.realize(a));
    }
    if (inter.count() != CountClass::exactly(1)) return false;
    auto it = std::find(omega.point_sets.begin(), omega.point_sets.end(), inter);
    if (it == omega.point_sets.end()) return false;
    auto idx = static_cast<std::size_t>(it - omega.point_sets.begin());
    if (hit[idx]) return false;  // not injective
    hit[idx] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Homomorphism::Homomorphism(FiniteBooleanAlgebra source, FiniteBooleanAlgebra target,
                           std::vector<int> atom_map)
    : source_(source), target_(target), atom_map_(std::move(atom_map)) {
  if (static_cast<int>(atom_map_.size()) != target_.atom_count())
    throw std::invalid_argument("atom map must cover every atom of the target");
  for (int a : atom_map_)
    if (a < 0 || a >= source_.atom_count())
      throw std::invalid_argument("atom map value out of range");
}

Homomorphism Homomorphism::identity(const FiniteBooleanAlgebra& b) {
  std::vector<int> id(b.atom_count());
  for (int i = 0; i < b.atom_count(); ++i) id[i] = i;
  return Homomorphism(b, b, std::move(id));
}

AlgebraElement Homomorphism::apply(const AlgebraElement& a) const {
  if (!source_.owns(a)) throw std::domain_error("element from a different algebra");
  std::uint64_t mask = 0;
  for (int beta = 0; beta < target_.atom_count(); ++beta)
    if (a.mask >> atom_map_[beta] & 1) mask |= std::uint64_t(1) << beta;
  return target_.element(mask);
}

Homomorphism Homomorphism::compose_after(const Homomorphism& first) const {
  if (!(first.target_ == source_))
    throw std::domain_error("homomorphisms do not compose");
  std::vector<int> composed(target_.atom_count());
  for (int beta = 0; beta < target_.atom_count(); ++beta)
    composed[beta] = first.atom_map_[atom_map_[beta]];
  return Homomorphism(first.source_, target_, std::move(composed));
}

Homomorphism Homomorphism::from_element_map(const FiniteBooleanAlgebra& source,
                                            const FiniteBooleanAlgebra& target,
                                            const std::vector<AlgebraElement>& images) {
  if (images.size() != source.element_count())
    throw std::invalid_argument("element map must cover every element of the source");
  // For each target atom there must be exactly one source atom whose image
  // lies above it; that is the reconstructed atom map.
  std::vector<int> atom_map(target.atom_count(), -1);
  for (int beta = 0; beta < target.atom_count(); ++beta) {
    for (int alpha = 0; alpha < source.atom_count(); ++alpha) {
      const AlgebraElement& img = images[std::uint64_t(1) << alpha];
      if (!target.owns(img)) throw std::domain_error("image from a different algebra");
      if (img.mask >> beta & 1) {
        if (atom_map[beta] != -1)
          throw std::invalid_argument("not a homomorphism: atom images overlap");
        atom_map[beta] = alpha;
      }
    }
    if (atom_map[beta] == -1)
      throw std::invalid_argument("not a homomorphism: atom images do not cover 1");
  }
  Homomorphism h(source, target, std::move(atom_map));
  for (std::uint64_t m = 0; m < source.element_count(); ++m)
    if (h.apply(source.element(m)) != images[m])
      throw std::invalid_argument("element map disagrees with its atom reconstruction");
  return h;
}

Ultrafilter DualMap::apply(const Ultrafilter& w) const {
  if (w.atoms != hom.target().atom_count())
    throw std::domain_error("ultrafilter from a different algebra");
  return {hom.source().atom_count(), point_map[w.atom_index]};
}

DualMap dual_map(const Homomorphism& g) {
  // g*(omega) = { a : g(a) in omega } is principal at atom_map(beta).
  return DualMap{g, g.atom_map()};
}

bool verify_dual_preimages(const DualMap& d) {
  const FiniteBooleanAlgebra& a = d.hom.source();
  for (std::uint64_t m = 0; m < a.element_count(); ++m) {
    AlgebraElement elem = a.element(m);
    AlgebraElement image = d.hom.apply(elem);
    // (g*)^{-1}(U_elem) as a set of target ultrafilters.
    std::uint64_t preimage = 0;
    for (int beta = 0; beta < d.hom.target().atom_count(); ++beta)
      if (elem.mask >> d.point_map[beta] & 1) preimage |= std::uint64_t(1) << beta;
    if (preimage != image.mask) return false;
  }
  return true;
}

}  // namespace cutcx
