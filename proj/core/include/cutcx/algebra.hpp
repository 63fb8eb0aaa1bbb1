#ifndef CUTCX_ALGEBRA_HPP
#define CUTCX_ALGEBRA_HPP

#include <cstdint>
#include <vector>

#include "cutcx/space.hpp"

namespace cutcx {

struct AlgebraElement {
  int atoms = 0;           // width tag of the owning algebra
  std::uint64_t mask = 0;  // subset of the atom index set

  bool operator==(const AlgebraElement& o) const {
    return atoms == o.atoms && mask == o.mask;
  }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }
};

/// The powerset algebra on a finite atom set. Elements are subsets of the
/// atom index set encoded as bit vectors.
class FiniteBooleanAlgebra {
 public:
  explicit FiniteBooleanAlgebra(int atom_count);

  int atom_count() const { return atom_count_; }
  std::uint64_t element_count() const { return std::uint64_t(1) << atom_count_; }
  std::uint64_t full_mask() const { return element_count() - 1; }

  AlgebraElement zero() const { return {atom_count_, 0}; }
  AlgebraElement one() const { return {atom_count_, full_mask()}; }
  AlgebraElement atom(int i) const;
  AlgebraElement element(std::uint64_t mask) const;
  AlgebraElement element_from_atoms(const std::vector<int>& atom_indices) const;

  bool owns(const AlgebraElement& a) const { return a.atoms == atom_count_; }

  bool operator==(const FiniteBooleanAlgebra& o) const {
    return atom_count_ == o.atom_count_;
  }

 private:
  int atom_count_;
};

AlgebraElement meet(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement join(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement complement_of(const AlgebraElement& a);
bool leq(const AlgebraElement& a, const AlgebraElement& b);
bool is_atom(const AlgebraElement& a);

std::vector<AlgebraElement> atoms(const FiniteBooleanAlgebra& b);
std::vector<int> atom_indices(const AlgebraElement& a);

/// A principal ultrafilter: everything above one atom. For finite algebras
/// these are all the ultrafilters.
struct Ultrafilter {
  int atoms = 0;
  int atom_index = 0;

  bool contains(const AlgebraElement& a) const;
  bool operator==(const Ultrafilter& o) const {
    return atoms == o.atoms && atom_index == o.atom_index;
  }
};

std::vector<Ultrafilter> ultrafilters(const FiniteBooleanAlgebra& b);

/// Extends the principal filter of a nonzero generator to an ultrafilter,
/// at the lowest atom below the generator.
Ultrafilter extend_filter(const FiniteBooleanAlgebra& b, const AlgebraElement& generator);

/// The dual space of a finite algebra together with the unit b |-> U_b.
struct StoneDual {
  FiniteBooleanAlgebra algebra;
  SpaceSpec space;                  // Finite(atom_count), point i = ultrafilter at atom i
  std::vector<Ultrafilter> points;

  /// eta(a) = { omega : a in omega }, as a clopen subset of the dual space.
  ClopenSet eta(const AlgebraElement& a) const;
  /// Inverse of eta; throws when the clopen set is not in the image (it
  /// always is, for finite duals).
  AlgebraElement eta_inverse(const ClopenSet& u) const;
};

StoneDual stone_dual(const FiniteBooleanAlgebra& b);

/// The clopen algebra of a space with finitely many points, with the point
/// classes retained so that the counit can be evaluated.
struct ClopenAlgebra {
  SpaceSpec space;
  FiniteBooleanAlgebra algebra;          // one atom per point
  std::vector<ClopenSet> point_sets;     // singleton clopen per point, sorted

  ClopenSet realize(const AlgebraElement& a) const;
};

ClopenAlgebra clopen_algebra(const SpaceSpec& s);

/// Checks that the counit is a bijection: each ultrafilter of the clopen
/// algebra meets in exactly one point and every point is hit once.
bool verify_epsilon(const SpaceSpec& s);

/// A homomorphism f : A -> B between finite algebras, stored by its atom map
/// atoms(B) -> atoms(A); f(a) is the join of the B-atoms mapping into a.
class Homomorphism {
 public:
  Homomorphism(FiniteBooleanAlgebra source, FiniteBooleanAlgebra target,
               std::vector<int> atom_map);

  /// Reconstructs the atom map from an arbitrary element map, rejecting maps
  /// that are not homomorphisms.
  static Homomorphism from_element_map(const FiniteBooleanAlgebra& source,
                                       const FiniteBooleanAlgebra& target,
                                       const std::vector<AlgebraElement>& images);

  const FiniteBooleanAlgebra& source() const { return source_; }
  const FiniteBooleanAlgebra& target() const { return target_; }
  const std::vector<int>& atom_map() const { return atom_map_; }

  AlgebraElement apply(const AlgebraElement& a) const;
  Homomorphism compose_after(const Homomorphism& first) const;  // this(first(x))

  static Homomorphism identity(const FiniteBooleanAlgebra& b);

 private:
  FiniteBooleanAlgebra source_;
  FiniteBooleanAlgebra target_;
  std::vector<int> atom_map_;
};

/// The dual continuous map g* : E(B) -> E(A) of g : A -> B, as a map on
/// ultrafilter (atom) indices.
struct DualMap {
  Homomorphism hom;
  std::vector<int> point_map;  // index in E(target) -> index in E(source)

  Ultrafilter apply(const Ultrafilter& w) const;
};

DualMap dual_map(const Homomorphism& g);

/// Checks (g*)^{-1}(U_a) = U_{g(a)} for every element a of the source.
bool verify_dual_preimages(const DualMap& d);

}  // namespace cutcx

#endif
