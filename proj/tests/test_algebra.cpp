#include <random>
#include <set>

#include "doctest.h"

#include "cutcx/algebra.hpp"

using namespace cutcx;

TEST_CASE("connectives are the set operations") {
  FiniteBooleanAlgebra b(3);
  AlgebraElement x = b.element_from_atoms({0, 1});
  AlgebraElement y = b.element_from_atoms({1, 2});
  CHECK(meet(x, y) == b.element_from_atoms({1}));
  CHECK(join(x, y) == b.one());
  CHECK(join(x, complement_of(x)) == b.one());
  CHECK(meet(x, complement_of(x)) == b.zero());
  CHECK(leq(b.zero(), x));
  CHECK(leq(x, b.one()));
  CHECK(!leq(x, y));

  FiniteBooleanAlgebra other(4);
  CHECK_THROWS_AS(meet(x, other.zero()), std::domain_error);
}

TEST_CASE("atoms are the singletons") {
  for (int k = 1; k <= 6; ++k) {
    FiniteBooleanAlgebra b(k);
    auto at = atoms(b);
    CHECK(static_cast<int>(at.size()) == k);
    for (const AlgebraElement& a : at) {
      CHECK(is_atom(a));
      // immediate successor of 0: nothing strictly between
      for (std::uint64_t m = 1; m < a.mask; ++m)
        if ((m & ~a.mask) == 0) CHECK(m == a.mask);
    }
  }
  FiniteBooleanAlgebra one_atom(1);
  CHECK(one_atom.element_count() == 2);
  CHECK(atoms(one_atom).size() == 1);
}

TEST_CASE("ultrafilters: one per atom, maximality dichotomy") {
  for (int k = 1; k <= 6; ++k) {
    FiniteBooleanAlgebra b(k);
    auto ufs = ultrafilters(b);
    CHECK(static_cast<int>(ufs.size()) == k);
    for (const Ultrafilter& w : ufs)
      for (std::uint64_t m = 0; m < b.element_count(); ++m) {
        AlgebraElement x = b.element(m);
        CHECK(w.contains(x) != w.contains(complement_of(x)));
      }
  }
}

TEST_CASE("extend_filter picks the lowest atom and contains its generator") {
  FiniteBooleanAlgebra b(3);
  CHECK(extend_filter(b, b.element_from_atoms({0, 1})).atom_index == 0);
  CHECK(extend_filter(b, b.element_from_atoms({1, 2})).atom_index == 1);
  CHECK_THROWS_AS(extend_filter(b, b.zero()), std::invalid_argument);
  for (std::uint64_t m = 1; m < b.element_count(); ++m) {
    AlgebraElement g = b.element(m);
    CHECK(extend_filter(b, g).contains(g));
  }
}

TEST_CASE("stone dual: eta is an isomorphism onto the clopen algebra") {
  FiniteBooleanAlgebra b(4);
  StoneDual dual = stone_dual(b);
  CHECK(dual.points.size() == 4);
  CHECK(count_space(dual.space) == CountClass::exactly(4));

  std::set<std::vector<std::string>> image;
  for (std::uint64_t m = 0; m < b.element_count(); ++m)
    image.insert(dual.eta(b.element(m)).antichain());
  CHECK(image.size() == 16);

  CHECK(dual.eta(b.zero()).empty());
  CHECK(dual.eta(b.one()).is_whole_space());
  // eta({0,2}) is the two-point set {w_0, w_2}.
  ClopenSet u = dual.eta(b.element_from_atoms({0, 2}));
  CHECK(u.count() == CountClass::exactly(2));
  CHECK(dual.eta_inverse(u) == b.element_from_atoms({0, 2}));

  for (std::uint64_t m = 0; m < b.element_count(); ++m)
    for (std::uint64_t m2 = 0; m2 < b.element_count(); ++m2) {
      AlgebraElement x = b.element(m), y = b.element(m2);
      CHECK(dual.eta(meet(x, y)) == dual.eta(x).intersect(dual.eta(y)));
      CHECK(dual.eta(join(x, y)) == dual.eta(x).unite(dual.eta(y)));
    }
}

TEST_CASE("clopen algebra and the counit") {
  ClopenAlgebra omega = clopen_algebra(SpaceSpec::finite(5));
  CHECK(omega.algebra.atom_count() == 5);
  CHECK(verify_epsilon(SpaceSpec::finite(5)));
  CHECK(verify_epsilon(SpaceSpec::finite(1)));
  for (int n = 1; n <= 8; ++n) {
    // round trip: E(Omega(Finite(n))) has n points
    CHECK(static_cast<int>(ultrafilters(clopen_algebra(SpaceSpec::finite(n)).algebra).size()) == n);
  }
  CHECK_THROWS_AS(clopen_algebra(SpaceSpec::cantor()), std::domain_error);
}

TEST_CASE("dual maps: forced images and preimage identity") {
  FiniteBooleanAlgebra a(2), b(3);
  Homomorphism g(a, b, {0, 0, 1});
  DualMap d = dual_map(g);
  CHECK(d.apply(Ultrafilter{3, 0}).atom_index == 0);
  CHECK(d.apply(Ultrafilter{3, 2}).atom_index == 1);
  CHECK(verify_dual_preimages(d));
  // (g*)^{-1}(U_{a0}) = {w_b0, w_b1} = U_{g(a0)}
  CHECK(g.apply(a.atom(0)) == b.element_from_atoms({0, 1}));

  Homomorphism id = Homomorphism::identity(b);
  DualMap di = dual_map(id);
  for (int i = 0; i < 3; ++i) CHECK(di.point_map[i] == i);
}

TEST_CASE("contravariance of duals on random homomorphisms") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    int ka = 1 + static_cast<int>(rng() % 5);
    int kb = 1 + static_cast<int>(rng() % 5);
    int kc = 1 + static_cast<int>(rng() % 5);
    std::vector<int> m1(static_cast<std::size_t>(kb)), m2(static_cast<std::size_t>(kc));
    for (int& v : m1) v = static_cast<int>(rng() % static_cast<std::uint64_t>(ka));
    for (int& v : m2) v = static_cast<int>(rng() % static_cast<std::uint64_t>(kb));
    Homomorphism g(FiniteBooleanAlgebra(ka), FiniteBooleanAlgebra(kb), m1);
    Homomorphism h(FiniteBooleanAlgebra(kb), FiniteBooleanAlgebra(kc), m2);
    Homomorphism hg = h.compose_after(g);
    CHECK(verify_dual_preimages(dual_map(g)));
    CHECK(verify_dual_preimages(dual_map(hg)));
    DualMap dg = dual_map(g), dh = dual_map(h), dhg = dual_map(hg);
    for (int i = 0; i < kc; ++i) CHECK(dhg.point_map[i] == dg.point_map[dh.point_map[i]]);
  }
}

TEST_CASE("element maps are validated by atom reconstruction") {
  FiniteBooleanAlgebra a(2), b(2);
  // The swap automorphism, presented element by element.
  std::vector<AlgebraElement> images;
  for (std::uint64_t m = 0; m < a.element_count(); ++m) {
    std::uint64_t swapped = ((m & 1) << 1) | ((m >> 1) & 1);
    images.push_back(b.element(swapped));
  }
  Homomorphism h = Homomorphism::from_element_map(a, b, images);
  CHECK(h.atom_map() == std::vector<int>{1, 0});

  // A non-homomorphism: 0 and 1 both sent to 1.
  std::vector<AlgebraElement> bad(static_cast<std::size_t>(a.element_count()), b.one());
  CHECK_THROWS_AS(Homomorphism::from_element_map(a, b, bad), std::invalid_argument);
}

TEST_CASE("finite subcover: a covering family has a small covering subfamily") {
  std::mt19937_64 rng(5);
  for (int k = 1; k <= 6; ++k) {
    FiniteBooleanAlgebra b(k);
    for (int trial = 0; trial < 40; ++trial) {
      // Random family, then check whether it covers every ultrafilter.
      std::vector<AlgebraElement> family;
      for (int i = 0; i < 5; ++i) family.push_back(b.element(rng() % b.element_count()));
      bool covers = true;
      for (const Ultrafilter& w : ultrafilters(b)) {
        bool hit = false;
        for (const AlgebraElement& s : family)
          if (w.contains(s)) hit = true;
        if (!hit) covers = false;
      }
      if (!covers) continue;
      // Greedy subfamily: one witness per atom.
      std::set<std::uint64_t> sub;
      for (const Ultrafilter& w : ultrafilters(b))
        for (const AlgebraElement& s : family)
          if (w.contains(s)) {
            sub.insert(s.mask);
            break;
          }
      CHECK(static_cast<int>(sub.size()) <= k);
      for (const Ultrafilter& w : ultrafilters(b)) {
        bool hit = false;
        for (std::uint64_t m : sub)
          if (w.contains(b.element(m))) hit = true;
        CHECK(hit);
      }
    }
  }
}

TEST_CASE("homomorphisms preserve the connectives on all element pairs") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    int ka = 1 + static_cast<int>(rng() % 4);
    int kb = 1 + static_cast<int>(rng() % 4);
    std::vector<int> amap(static_cast<std::size_t>(kb));
    for (int& v : amap) v = static_cast<int>(rng() % static_cast<std::uint64_t>(ka));
    FiniteBooleanAlgebra a(ka), b(kb);
    Homomorphism g(a, b, amap);
    CHECK(g.apply(a.zero()) == b.zero());
    CHECK(g.apply(a.one()) == b.one());
    for (std::uint64_t m = 0; m < a.element_count(); ++m)
      for (std::uint64_t m2 = 0; m2 < a.element_count(); ++m2) {
        AlgebraElement x = a.element(m), y = a.element(m2);
        CHECK(g.apply(meet(x, y)) == meet(g.apply(x), g.apply(y)));
        CHECK(g.apply(join(x, y)) == join(g.apply(x), g.apply(y)));
      }
  }
}
