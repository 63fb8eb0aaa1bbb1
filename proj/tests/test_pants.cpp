#include <set>

#include "doctest.h"

#include "cutcx/pants.hpp"
#include "cutcx/reconstruction.hpp"

using namespace cutcx;

namespace {

Cut finite_cut(const SpaceSpec& spec, std::initializer_list<int> points) {
  std::vector<std::string> raw;
  for (int p : points) raw.push_back(std::string(static_cast<std::size_t>(p), '1') + "0");
  return Cut::from_strings(spec, raw);
}

std::uint64_t double_factorial_odd(int m) {  // m!! for odd m
  std::uint64_t f = 1;
  for (int i = m; i >= 3; i -= 2) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

TEST_CASE("standard pants: cylinder cuts, deduplicated as partitions") {
  PantsDecomposition p2 = standard_cantor_pants(2);
  // Strings 0,1,00,01,10,11 name five partitions: [0]|[1] appears twice.
  CHECK(p2.cuts.size() == 5);
  for (std::size_t i = 0; i < p2.cuts.size(); ++i)
    for (std::size_t j = i + 1; j < p2.cuts.size(); ++j)
      CHECK(!crosses(p2.cuts[i], p2.cuts[j]));

  PantsDecomposition p4 = standard_cantor_pants(4);
  CHECK(p4.cuts.size() == 2 + 4 + 8 + 16 - 1);
  for (std::size_t i = 0; i < p4.cuts.size(); ++i)
    for (std::size_t j = i + 1; j < p4.cuts.size(); ++j)
      CHECK(!crosses(p4.cuts[i], p4.cuts[j]));
}

TEST_CASE("restriction drops degenerate and peripheral members") {
  PantsDecomposition p2 = standard_cantor_pants(2);
  // Finite(4): only cuts with both sides of two points survive.
  PantsDecomposition r4 = restrict_pants(SpaceSpec::finite(4), p2);
  for (const Cut& c : r4.cuts) CHECK(is_nonperipheral(c));
  CHECK(r4.cuts.size() == 1);  // [11] | {p0, p1}

  // Convergent, depth 3: gamma_11 and gamma_111 survive; gamma_1 restricts to
  // a peripheral cut (its [0]-side is the single point p0).
  PantsDecomposition r = restrict_pants(SpaceSpec::convergent(), standard_cantor_pants(3));
  REQUIRE(r.cuts.size() == 2);
  SpaceSpec conv = SpaceSpec::convergent();
  CHECK(r.cuts[0] == Cut::from_strings(conv, {"11"}));
  CHECK(r.cuts[1] == Cut::from_strings(conv, {"111"}));
  for (const Cut& c : r.cuts) {
    bool inf0 = c.side(0).count().is_infinite();
    bool inf1 = c.side(1).count().is_infinite();
    CHECK(inf0 != inf1);
    CHECK((inf0 ? c.side(1) : c.side(0)).count().at_least(2));
  }
}

TEST_CASE("crossing sets") {
  PantsDecomposition p3 = standard_cantor_pants(3);
  SpaceSpec cantor = SpaceSpec::cantor();
  Cut probe = Cut::from_strings(cantor, {"00", "10"});
  std::vector<int> xs = crossing_set(probe, p3);
  // It crosses the depth-one cut (both orientations collapsed to one member).
  std::set<Cut> crossed;
  for (int i : xs) crossed.insert(p3.cuts[static_cast<std::size_t>(i)]);
  CHECK(crossed.count(Cut::from_strings(cantor, {"0"})) == 1);
  CHECK(!xs.empty());
  // Members never cross each other.
  for (const Cut& m : p3.cuts) CHECK(crossing_set(m, p3).empty());
}

TEST_CASE("bounded pants certificate at small depth") {
  PantsDecomposition p4 = standard_cantor_pants(4);
  PantsBoundedReport r = verify_pants_bounded(p4, 3);
  CHECK(r.pairwise_compatible);
  CHECK(r.every_probe_crossed);
  // A depth-3 probe crosses only members of depth < 3: at most 5 partitions.
  CHECK(r.max_crossing_set <= 5);
  CHECK(r.probes_checked > 0);
}

TEST_CASE("adjacency: witnesses and bounded search") {
  SpaceSpec f5 = SpaceSpec::finite(5);
  PantsDecomposition gamma =
      make_pants(f5, {finite_cut(f5, {0, 1}), finite_cut(f5, {3, 4})});
  AdjacencyOutcome out = adjacent(gamma, 0, 1, 0);
  REQUIRE(out.kind == AdjacencyOutcome::Kind::Witness);
  // e.g. {1,3} | {0,2,4} crosses both and nothing else
  CHECK(crosses(*out.witness, gamma.cuts[0]));
  CHECK(crosses(*out.witness, gamma.cuts[1]));
  CHECK_THROWS_AS(adjacent(gamma, 0, 0, 0), std::invalid_argument);

  // Cantor, standard depth 2: gamma_00 and gamma_01 adjacent via a depth-4
  // witness built from halves of [00] and [01].
  PantsDecomposition p2 = standard_cantor_pants(2);
  SpaceSpec cantor = SpaceSpec::cantor();
  int i00 = -1, i01 = -1;
  for (std::size_t i = 0; i < p2.cuts.size(); ++i) {
    if (p2.cuts[i] == Cut::from_strings(cantor, {"00"})) i00 = static_cast<int>(i);
    if (p2.cuts[i] == Cut::from_strings(cantor, {"01"})) i01 = static_cast<int>(i);
  }
  REQUIRE(i00 >= 0);
  REQUIRE(i01 >= 0);
  AdjacencyOutcome c_out = adjacent(p2, i00, i01, 4);
  CHECK(c_out.kind == AdjacencyOutcome::Kind::Witness);
}

TEST_CASE("pants enumeration: maximal simplices with the double-factorial count") {
  auto p5 = enumerate_pants_finite(5);
  CHECK(p5.size() == 15);
  auto p6 = enumerate_pants_finite(6);
  CHECK(p6.size() == 105);
  auto p7 = enumerate_pants_finite(7);
  CHECK(p7.size() == 945);
  CHECK(p5.size() == double_factorial_odd(2 * 5 - 5));
  CHECK(p6.size() == double_factorial_odd(2 * 6 - 5));
  CHECK(p7.size() == double_factorial_odd(2 * 7 - 5));
  for (const auto& gamma : p5) CHECK(gamma.cuts.size() == 2);
  for (const auto& gamma : p7) CHECK(gamma.cuts.size() == 4);
  CHECK_THROWS_AS(enumerate_pants_finite(9), std::invalid_argument);
}

TEST_CASE("pants survive induced isomorphisms") {
  // Push a decomposition through a point permutation: still maximal and
  // pairwise compatible.
  FiniteComplex fc = finite_complex(6);
  auto all = enumerate_pants_finite(6);
  std::vector<int> perm = {3, 0, 5, 2, 4, 1};
  auto vmap = induced_automorphism(perm, fc);
  std::set<std::set<int>> originals;
  for (const auto& gamma : all) {
    std::set<int> ids;
    for (const Cut& c : gamma.cuts) ids.insert(*fc.graph.index_of(c));
    originals.insert(ids);
  }
  for (const auto& gamma : all) {
    std::set<int> image;
    for (const Cut& c : gamma.cuts) image.insert(vmap[static_cast<std::size_t>(*fc.graph.index_of(c))]);
    CHECK(originals.count(image) == 1);
  }
}

TEST_CASE("peripheral pairs: direct test") {
  SpaceSpec f5 = SpaceSpec::finite(5);
  CHECK(is_peripheral_pair(finite_cut(f5, {1, 2}), finite_cut(f5, {3, 4})));
  SpaceSpec f7 = SpaceSpec::finite(7);
  CHECK(is_peripheral_pair(finite_cut(f7, {0, 1, 2}), finite_cut(f7, {3, 4, 5})));
  SpaceSpec f8 = SpaceSpec::finite(8);
  CHECK(!is_peripheral_pair(finite_cut(f8, {0, 1, 2}), finite_cut(f8, {3, 4, 5})));
  CHECK_THROWS_AS(is_peripheral_pair(finite_cut(f5, {0, 1}), finite_cut(f5, {0, 2})),
                  std::domain_error);
}

TEST_CASE("peripheral pairs through link components") {
  SpaceSpec f7 = SpaceSpec::finite(7);
  CutGraph g7 = CutGraph::build(enumerate_cuts_finite(f7));
  CHECK(peripheral_pair_via_links(g7, finite_cut(f7, {0, 1, 2}), finite_cut(f7, {3, 4, 5})) == 2);

  SpaceSpec f8 = SpaceSpec::finite(8);
  CutGraph g8 = CutGraph::build(enumerate_cuts_finite(f8));
  CHECK(peripheral_pair_via_links(g8, finite_cut(f8, {0, 1, 2}), finite_cut(f8, {3, 4, 5})) == 3);

  // The link criterion is only stated for non-outermost cuts.
  CHECK_THROWS_AS(
      peripheral_pair_via_links(g7, finite_cut(f7, {0, 1}), finite_cut(f7, {2, 3, 4})),
      std::invalid_argument);
}

TEST_CASE("valence sweeps") {
  ValenceCriterionReport r7 = valence_criterion_check(7);
  CHECK(r7.decompositions == 945);
  CHECK(r7.outermost_iff_low_valence);

  ValenceCriterionReport r6 = valence_criterion_check(6);
  CHECK(r6.decompositions == 105);
  CHECK(r6.valence_at_most_two);
  CHECK(r6.biconditional_fails);

  // A witnessed valence-3 configuration at n=7: {0,1,2}|rest in the
  // decomposition {0,1}|r, {0,1,2}|r, {0,1,2,3}|r? Use the sweep instead:
  // some decomposition gives a non-outermost cut valence 3.
  ValenceOneReport v7 = valence_one_check(7);
  CHECK(v7.holds);
  CHECK(v7.qualifying > 0);
  ValenceOneReport v8 = valence_one_check(8);
  CHECK(v8.holds);
  CHECK(v8.qualifying > 0);
}

TEST_CASE("an outermost cut next to its peripheral partner has valence one") {
  SpaceSpec f7 = SpaceSpec::finite(7);
  // Gamma containing gamma = {0,1}|rest and eta = {0,1,2}|rest.
  Cut gamma = finite_cut(f7, {0, 1});
  Cut eta = finite_cut(f7, {0, 1, 2});
  Cut third = finite_cut(f7, {3, 4});
  Cut fourth = finite_cut(f7, {3, 4, 5});
  PantsDecomposition pants = make_pants(f7, {gamma, eta, third, fourth});
  CutGraph a = adjacency_graph_finite(pants);
  auto idx = a.index_of(gamma);
  REQUIRE(idx.has_value());
  CHECK(a.degree(*idx) == 1);
  CHECK(a.edge(*idx, *a.index_of(eta)));
}

TEST_CASE("the n=8 cap: ten thousand decompositions enumerate exactly") {
  CHECK(enumerate_pants_finite(8).size() == 10395);
}
