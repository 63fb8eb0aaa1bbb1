#include "doctest.h"

#include "cutcx/spheres.hpp"

using namespace cutcx;

namespace {

std::vector<ClopenSet> finite_sides(const SpaceSpec& spec,
                                    std::initializer_list<std::vector<int>> groups) {
  std::vector<ClopenSet> out;
  for (const auto& g : groups) {
    std::vector<std::string> raw;
    for (int p : g) raw.push_back(std::string(static_cast<std::size_t>(p), '1') + "0");
    out.push_back(canonicalize(spec, raw));
  }
  return out;
}

std::vector<ClopenSet> cylinder_sides(const SpaceSpec& spec,
                                      std::initializer_list<std::string> strings) {
  std::vector<ClopenSet> out;
  for (const std::string& s : strings) out.push_back(canonicalize(spec, {s}));
  return out;
}

}  // namespace

TEST_CASE("sphere construction and interiors") {
  SpaceSpec f7 = SpaceSpec::finite(7);
  Sphere s = make_sphere(f7, finite_sides(f7, {{0, 1}, {2, 3}}));
  CHECK(s.boundary_count() == 2);
  CHECK(s.puncture_count() == 3);
  CHECK(s.residual.count() == CountClass::exactly(3));

  Cut interior = Cut::from_strings(f7, {"11110", "111110"});  // {4,5} | rest
  Cut splitting = Cut::from_strings(f7, {"0", "11110"});      // {0,4} | rest splits {0,1}
  CHECK(is_interior(interior, s));
  CHECK(!is_interior(splitting, s));
  for (const Cut& b : s.boundary) CHECK(!is_interior(b, s));

  SpaceSpec cantor = SpaceSpec::cantor();
  Sphere c5 = make_sphere(cantor, cylinder_sides(cantor, {"00", "01", "10", "110", "111"}));
  CHECK(c5.boundary_count() == 5);
  CHECK(c5.puncture_count() == 0);
  CHECK(c5.residual.empty());
}

TEST_CASE("sphere construction errors name the violated condition") {
  SpaceSpec f7 = SpaceSpec::finite(7);
  CHECK_THROWS_WITH_AS(make_sphere(f7, finite_sides(f7, {{0, 1}, {1, 2}})),
                       doctest::Contains("overlapping sides"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_sphere(f7, finite_sides(f7, {{0}})),
                       doctest::Contains("peripheral boundary"), std::invalid_argument);
  SpaceSpec cantor = SpaceSpec::cantor();
  CHECK_THROWS_WITH_AS(make_sphere(cantor, cylinder_sides(cantor, {"00"})),
                       doctest::Contains("infinite residual"), std::invalid_argument);
}

TEST_CASE("quotients, restriction maps and commuting triangles") {
  SpaceSpec f7 = SpaceSpec::finite(7);
  Sphere s = make_sphere(f7, finite_sides(f7, {{0, 1}, {2, 3}}));
  QuotientSpace q = quotient_space(s);
  CHECK(q.space == SpaceSpec::finite(5));
  REQUIRE(q.labels.size() == 5);
  CHECK(q.labels[0] == "b0");
  CHECK(q.labels[1] == "b1");

  SpaceSpec cantor = SpaceSpec::cantor();
  Sphere s1 = make_sphere(cantor, cylinder_sides(cantor, {"0", "1"}));
  Sphere s2 = make_sphere(cantor, cylinder_sides(cantor, {"00", "01", "10", "11"}));
  std::vector<int> rmap = restriction_map(s1, s2);
  // Depth-two labels map to their depth-one prefix label.
  CHECK(rmap == std::vector<int>{0, 0, 1, 1});
  CHECK(verify_triangle(s1, s2));

  Sphere s3 = make_sphere(cantor, cylinder_sides(cantor, {"000", "001", "010", "011", "100",
                                                          "101", "110", "111"}));
  CHECK(verify_triangle(s2, s3));
  CHECK_THROWS_AS(restriction_map(s2, s1), std::domain_error);
}

TEST_CASE("exhaustions: construction per space family") {
  Exhaustion cantor_ex = build_exhaustion(SpaceSpec::cantor(), 3);
  CHECK(cantor_ex.increasing);
  CHECK(cantor_ex.complexity);
  CHECK(cantor_ex.infinite_complement);
  CHECK(cantor_ex.certified_depth == 3);
  for (const Cut& c : enumerate_cuts_bounded(SpaceSpec::cantor(), 3)) {
    bool inside = false;
    for (const Sphere& s : cantor_ex.levels)
      if (is_interior(c, s)) inside = true;
    CHECK(inside);
  }

  // Convergent: the only infinite cylinders are the all-ones ones.
  Exhaustion conv_ex = build_exhaustion(SpaceSpec::convergent(), 3);
  for (const Sphere& s : conv_ex.levels) {
    REQUIRE(s.boundary_count() == 1);
    for (const std::string& t : s.outer[0].antichain())
      CHECK(t.find('0') == std::string::npos);
  }

  // A union of two Cantor halves: the first sphere separates them.
  Exhaustion union_ex =
      build_exhaustion(SpaceSpec::union_of(SpaceSpec::cantor(), SpaceSpec::cantor()), 2);
  CHECK(union_ex.levels.front().boundary_count() == 2);
  for (const ClopenSet& u : union_ex.levels.front().outer)
    CHECK(u.count().is_infinite());

  CHECK_THROWS_AS(build_exhaustion(SpaceSpec::finite(6), 3), std::domain_error);
}

TEST_CASE("inverse limits: threads biject with cylinder classes") {
  // Hand-built depth-1/2/3 chain (not principal: complexity fails, the
  // inverse-limit identification needs only the chain structure).
  SpaceSpec cantor = SpaceSpec::cantor();
  std::vector<Sphere> levels = {
      make_sphere(cantor, cylinder_sides(cantor, {"0", "1"})),
      make_sphere(cantor, cylinder_sides(cantor, {"00", "01", "10", "11"})),
      make_sphere(cantor, cylinder_sides(cantor, {"000", "001", "010", "011", "100", "101",
                                                  "110", "111"}))};
  Exhaustion ex = exhaustion_from_spheres(cantor, levels);
  CHECK(ex.increasing);
  CHECK(!ex.complexity);
  CHECK(inverse_limit_check(ex, 3));  // threads <-> 8 depth-3 classes
  CHECK(inverse_limit_check(ex, 1));  // threads = labels of the first sphere

  Exhaustion conv_ex = build_exhaustion(SpaceSpec::convergent(), 3);
  for (int m = 1; m <= static_cast<int>(conv_ex.levels.size()); ++m)
    CHECK(inverse_limit_check(conv_ex, m));
}

TEST_CASE("link components: bounds and the core component") {
  SpaceSpec cantor = SpaceSpec::cantor();
  auto sides = cylinder_sides(cantor, {"00", "01", "10", "110", "111"});
  LinkComponentsReport r = link_components(cantor, sides, 4);
  CHECK(r.component_count == 6);
  CHECK(r.exactly_one_core);
  CHECK(r.core_component_size == 10);       // the quotient complex is the Petersen graph
  CHECK(r.core_opposite_max_clique == 2);   // its compatibility clique

  auto sides4 = cylinder_sides(cantor, {"00", "01", "10", "11"});
  LinkComponentsReport r4 = link_components(cantor, sides4, 3);
  CHECK(r4.component_count == 5);
  CHECK(r4.exactly_one_core);
  CHECK(r4.core_opposite_max_clique == 1);  // three pairwise-crossing cuts

  // Finite case: outermost boundary sides leave empty pieces.
  SpaceSpec f7 = SpaceSpec::finite(7);
  LinkComponentsReport rf = link_components(f7, finite_sides(f7, {{0, 1}, {2, 3}}), isolation_depth(f7));
  CHECK(rf.component_count == 1);
  CHECK(rf.exactly_one_core);
  CHECK(rf.core_opposite_max_clique == 2);  // quotient Finite(5)
}

TEST_CASE("sphere recognition") {
  SpaceSpec cantor = SpaceSpec::cantor();
  SphereRecognition rec =
      recognize_sphere(cantor, cylinder_sides(cantor, {"00", "01", "10", "110", "111"}), 4);
  REQUIRE(rec.ok);
  CHECK(rec.n == 0);
  CHECK(rec.k == 5);
  CHECK(rec.clique == 2);

  // One Cantor boundary around a three-point residue.
  SpaceSpec mixed = SpaceSpec::union_of(SpaceSpec::cantor(), SpaceSpec::finite(3));
  SphereRecognition rec2 = recognize_sphere(mixed, {canonicalize(mixed, {"0"})}, 4);
  REQUIRE(rec2.ok);
  CHECK(rec2.n == 3);
  CHECK(rec2.k == 1);
  CHECK(rec2.clique == 1);

  // A nested chain has an incomplete adjacency graph.
  SphereRecognition bad = recognize_sphere(
      cantor, cylinder_sides(cantor, {"0", "00", "000"}), 4);
  CHECK(!bad.ok);
  CHECK(bad.failure == "adjacency");

  // Finite specs go through direct set arithmetic.
  SpaceSpec f8 = SpaceSpec::finite(8);
  SphereRecognition frec = recognize_sphere(f8, finite_sides(f8, {{0, 1}, {2, 3}, {4, 5}}), 0);
  REQUIRE(frec.ok);
  CHECK(frec.n == 2);
  CHECK(frec.k == 3);
  SphereRecognition fbad = recognize_sphere(f8, finite_sides(f8, {{0, 1}, {1, 2}}), 0);
  CHECK(!fbad.ok);
}

TEST_CASE("recognition recovers construction on the sphere fixtures") {
  SpaceSpec cantor = SpaceSpec::cantor();
  struct F {
    std::vector<ClopenSet> sides;
    int depth;
  };
  std::vector<F> fixtures = {
      {cylinder_sides(cantor, {"00", "01", "10", "110", "111"}), 4},
      {cylinder_sides(cantor, {"00", "01", "10", "11"}), 3},
      {cylinder_sides(cantor, {"00", "01", "10", "11"}), 4},
  };
  for (const auto& f : fixtures) {
    Sphere s = make_sphere(cantor, f.sides);
    SphereRecognition rec = recognize_sphere(cantor, f.sides, f.depth);
    REQUIRE(rec.ok);
    CHECK(rec.n == s.puncture_count());
    CHECK(rec.k == s.boundary_count());
  }
}

TEST_CASE("triple condition") {
  SpaceSpec f7 = SpaceSpec::finite(7);
  auto mk = [&](std::initializer_list<int> pts) {
    std::vector<std::string> raw;
    for (int p : pts) raw.push_back(std::string(static_cast<std::size_t>(p), '1') + "0");
    return Cut::from_strings(f7, raw);
  };
  TripleReport r = triple_condition_check(mk({0, 1}), mk({2, 3}), mk({4, 5}), 6);
  CHECK(r.orientation_found);
  CHECK(r.triangle);
  CHECK(r.triple_nonempty);  // the central point 6

  SpaceSpec cantor = SpaceSpec::cantor();
  TripleReport rc = triple_condition_check(Cut::from_strings(cantor, {"00"}),
                                           Cut::from_strings(cantor, {"01"}),
                                           Cut::from_strings(cantor, {"10"}), 3);
  CHECK(rc.orientation_found);
  CHECK(rc.triangle);
  CHECK(rc.triple_nonempty);  // [11]

  // Finite(6): the triple intersection is empty; the witness search still
  // finds a triangle, and the k+1-component hypothesis fails (the link
  // intersection is empty).
  SpaceSpec f6 = SpaceSpec::finite(6);
  auto mk6 = [&](std::initializer_list<int> pts) {
    std::vector<std::string> raw;
    for (int p : pts) raw.push_back(std::string(static_cast<std::size_t>(p), '1') + "0");
    return Cut::from_strings(f6, raw);
  };
  Cut a = mk6({0, 1}), b = mk6({2, 3}), c = mk6({4, 5});
  TripleReport r6 = triple_condition_check(a, b, c, 5);
  CHECK(r6.orientation_found);
  CHECK(r6.triangle);
  CHECK(!r6.triple_nonempty);
  LinkComponentsReport guard = link_components(
      f6, {canonicalize(f6, {"0", "10"}), canonicalize(f6, {"110", "1110"}),
           canonicalize(f6, {"11110", "11111"})},
      isolation_depth(f6));
  CHECK(guard.linkint_size == 0);
  CHECK(guard.component_count != 4);
}

TEST_CASE("interior complexes are the quotient complexes") {
  SpaceSpec f8 = SpaceSpec::finite(8);
  Sphere s = make_sphere(f8, finite_sides(f8, {{0, 1}, {2, 3}}));
  InteriorComplex ic = interior_complex(s, isolation_depth(f8));
  CHECK(ic.isomorphic);
  CHECK(ic.interior.size() == 25);  // cut complex of Finite(6)

  SpaceSpec cantor = SpaceSpec::cantor();
  Sphere c5 = make_sphere(cantor, cylinder_sides(cantor, {"00", "01", "10", "110", "111"}));
  InteriorComplex icc = interior_complex(c5, 4);
  CHECK(icc.isomorphic);
  CHECK(icc.interior.size() == 10);  // Petersen
}

TEST_CASE("opposite-component bound across sphere fixtures and depths") {
  SpaceSpec cantor = SpaceSpec::cantor();
  for (int depth = 2; depth <= 4; ++depth) {
    auto sides = cylinder_sides(cantor, {"00", "01", "10", "11"});
    LinkComponentsReport r = link_components(cantor, sides, depth);
    CHECK(r.component_count <= 5);
  }
  for (int n = 7; n <= 9; ++n) {
    SpaceSpec spec = SpaceSpec::finite(n);
    Sphere s = make_sphere(spec, finite_sides(spec, {{0, 1}, {2, 3}}));
    LinkComponentsReport r =
        link_components(spec, s.outer, isolation_depth(spec));
    CHECK(r.component_count <= s.boundary_count() + 1);
  }
}
