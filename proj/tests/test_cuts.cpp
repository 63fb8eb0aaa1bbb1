#include <random>
#include <set>

#include "doctest.h"

#include "cutcx/automorphisms.hpp"
#include "cutcx/graph.hpp"
#include "cutcx/json_io.hpp"

using namespace cutcx;

namespace {

// Point-set side of Finite(n): isolating cylinders for each chosen point.
Cut finite_cut(const SpaceSpec& spec, std::initializer_list<int> points) {
  std::vector<std::string> raw;
  for (int p : points) raw.push_back(std::string(static_cast<std::size_t>(p), '1') + "0");
  return Cut::from_strings(spec, raw);
}

}  // namespace

TEST_CASE("cuts canonicalize and classify peripherality") {
  SpaceSpec f5 = SpaceSpec::finite(5);
  Cut c = finite_cut(f5, {0, 1});
  CHECK(is_nonperipheral(c));
  CHECK(is_outermost(c));
  CHECK(!is_nonperipheral(finite_cut(f5, {0})));
  CHECK(is_nonperipheral(Cut::from_strings(SpaceSpec::cantor(), {"0"})));
  CHECK(!is_outermost(Cut::from_strings(SpaceSpec::cantor(), {"0"})));
  CHECK_THROWS_AS(Cut::from_strings(f5, {}), std::invalid_argument);
  CHECK_THROWS_AS(Cut::from_strings(f5, {""}), std::invalid_argument);
  // Partition identity: the two orientations are equal.
  CHECK(finite_cut(f5, {0, 1}) == finite_cut(f5, {2, 3, 4}));
}

TEST_CASE("crossing is the four-quadrant test") {
  SpaceSpec f5 = SpaceSpec::finite(5);
  CHECK(crosses(finite_cut(f5, {0, 1}), finite_cut(f5, {0, 2})));
  CHECK(!crosses(finite_cut(f5, {0, 1}), finite_cut(f5, {2, 3})));
  SpaceSpec cantor = SpaceSpec::cantor();
  CHECK(crosses(Cut::from_strings(cantor, {"0"}), Cut::from_strings(cantor, {"00", "10"})));
  Cut c = Cut::from_strings(cantor, {"0"});
  CHECK(!crosses(c, c));
  CHECK_THROWS_AS(crosses(c, finite_cut(f5, {0, 1})), std::domain_error);
}

TEST_CASE("property: crossing is symmetric, irreflexive, orientation-blind") {
  std::mt19937_64 rng(33);
  SpaceSpec cantor = SpaceSpec::cantor();
  AtomSpace atoms = AtomSpace::build(cantor, 3);
  auto masks = enumerate_cut_masks(atoms);
  for (int trial = 0; trial < 200; ++trial) {
    Cut a = Cut::from_side(atoms.clopen(masks[rng() % masks.size()]));
    Cut b = Cut::from_side(atoms.clopen(masks[rng() % masks.size()]));
    CHECK(crosses(a, b) == crosses(b, a));
    CHECK(!crosses(a, a));
    Cut a_flipped = Cut::from_side(a.side(1));
    CHECK(crosses(a_flipped, b) == crosses(a, b));
  }
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_cuts_finite(SpaceSpec::finite(4)).size() == 3);
  CHECK(enumerate_cuts_finite(SpaceSpec::finite(5)).size() == 10);
  CHECK(enumerate_cuts_finite(SpaceSpec::finite(6)).size() == 25);
  for (int n = 4; n <= 9; ++n) {
    std::size_t expected = ((std::size_t(1) << n) - 2 - 2 * static_cast<std::size_t>(n)) / 2;
    CHECK(enumerate_cuts_finite(SpaceSpec::finite(n)).size() == expected);
  }
  // Bounded Cantor: every proper class subset is non-peripheral.
  CHECK(enumerate_cuts_bounded(SpaceSpec::cantor(), 2).size() == 7);
  CHECK(enumerate_cuts_bounded(SpaceSpec::cantor(), 3).size() == 127);
}

TEST_CASE("graphs: Petersen, the four-point case, bounded Cantor") {
  CutGraph petersen = CutGraph::build(enumerate_cuts_finite(SpaceSpec::finite(5)));
  CHECK(petersen.size() == 10);
  CHECK(petersen.edge_count() == 15);
  CHECK(petersen.is_regular(3));
  CHECK(petersen.triangle_free());
  CHECK(petersen.diameter().connected);
  CHECK(petersen.diameter().diameter == 2);

  CutGraph f4 = CutGraph::build(enumerate_cuts_finite(SpaceSpec::finite(4)));
  CHECK(f4.size() == 3);
  CHECK(f4.edge_count() == 0);
  CHECK(!f4.diameter().connected);
  CHECK(f4.component_count() == 3);

  CutGraph cantor3 = CutGraph::build(enumerate_cuts_bounded(SpaceSpec::cantor(), 3));
  auto d = cantor3.diameter();
  CHECK(d.connected);
  CHECK(d.diameter == 2);
  CHECK_THROWS_AS(CutGraph::build(std::vector<Cut>{}).diameter(), std::invalid_argument);
}

TEST_CASE("every edge re-tests as compatible; builders agree") {
  SpaceSpec cantor = SpaceSpec::cantor();
  AtomSpace atoms = AtomSpace::build(cantor, 2);
  auto masks = enumerate_cut_masks(atoms);
  CutGraph fast = CutGraph::build(atoms, masks);
  std::vector<Cut> cuts;
  for (auto m : masks) cuts.push_back(Cut::from_side(atoms.clopen(m)));
  CutGraph slow = CutGraph::build(cuts);
  REQUIRE(fast.size() == slow.size());
  for (int i = 0; i < fast.size(); ++i)
    for (int j = i + 1; j < fast.size(); ++j) {
      CHECK(fast.edge(i, j) == slow.edge(i, j));
      CHECK(fast.edge(i, j) == !crosses(cuts[static_cast<std::size_t>(i)], cuts[static_cast<std::size_t>(j)]));
    }
}

TEST_CASE("max clique matches the simplex dimension law") {
  for (int n = 4; n <= 8; ++n) {
    CutGraph g = CutGraph::build(enumerate_cuts_finite(SpaceSpec::finite(n)));
    CHECK(g.max_clique_size() == n - 3);
  }
}

TEST_CASE("short paths follow the connectivity argument") {
  SpaceSpec f5 = SpaceSpec::finite(5);
  Cut g1 = finite_cut(f5, {0, 1});
  CHECK(short_path(g1, g1) == std::vector<Cut>{g1});

  SpaceSpec cantor = SpaceSpec::cantor();
  Cut a = Cut::from_strings(cantor, {"0"});
  Cut b = Cut::from_strings(cantor, {"00", "10"});
  auto path = short_path(a, b);
  REQUIRE(path.size() == 3);
  CHECK(path[1] == Cut::from_strings(cantor, {"00"}));
  CHECK(!crosses(path[0], path[1]));
  CHECK(!crosses(path[1], path[2]));

  SpaceSpec f7 = SpaceSpec::finite(7);
  Cut x = finite_cut(f7, {0, 1});
  Cut y = finite_cut(f7, {1, 2});
  auto p2 = short_path(x, y);
  CHECK(p2.size() <= 3);  // length <= 2 via the three-point union
  for (std::size_t i = 0; i + 1 < p2.size(); ++i) {
    CHECK(!(p2[i] == p2[i + 1]));
    CHECK(!crosses(p2[i], p2[i + 1]));
  }

  CHECK_THROWS_AS(
      short_path(finite_cut(SpaceSpec::finite(4), {0, 1}), finite_cut(SpaceSpec::finite(4), {0, 2})),
      std::invalid_argument);
}

TEST_CASE("short paths are valid over random crossing pairs") {
  std::mt19937_64 rng(77);
  for (const SpaceSpec& spec :
       {SpaceSpec::finite(6), SpaceSpec::finite(8), SpaceSpec::cantor()}) {
    std::vector<Cut> cuts = count_space(spec).is_infinite()
                                ? enumerate_cuts_bounded(spec, 3)
                                : enumerate_cuts_finite(spec);
    const std::size_t max_len = count_space(spec).is_infinite() ? 3 : 5;
    for (int trial = 0; trial < 100; ++trial) {
      const Cut& a = cuts[rng() % cuts.size()];
      const Cut& b = cuts[rng() % cuts.size()];
      auto path = short_path(a, b);
      CHECK(path.size() <= max_len);
      CHECK(path.front() == a);
      CHECK(path.back() == b);
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        CHECK(!(path[i] == path[i + 1]));
        CHECK(!crosses(path[i], path[i + 1]));
        CHECK(is_nonperipheral(path[i]));
      }
    }
  }
}

TEST_CASE("links and opposite graphs") {
  CutGraph petersen = CutGraph::build(enumerate_cuts_finite(SpaceSpec::finite(5)));
  CutGraph link0 = petersen.link(0);
  CHECK(link0.size() == 3);
  CHECK(link0.edge_count() == 0);  // triangle-free
  CHECK(link0.opposite().edge_count() == 3);

  // A non-outermost 3|3 cut of Finite(6): its link's opposite has exactly two
  // components.
  SpaceSpec f6 = SpaceSpec::finite(6);
  CutGraph g6 = CutGraph::build(enumerate_cuts_finite(f6));
  Cut half = finite_cut(f6, {0, 1, 2});
  auto idx = g6.index_of(half);
  REQUIRE(idx.has_value());
  CutGraph l = g6.link(*idx);
  CHECK(l.size() == 6);
  CHECK(l.opposite().component_count() == 2);
  CHECK_THROWS_AS(g6.link(-1), std::domain_error);
}

TEST_CASE("join split realizes the link as a join") {
  SpaceSpec f6 = SpaceSpec::finite(6);
  Cut half = finite_cut(f6, {0, 1, 2});
  auto [u_space, v_space] = join_split(f6, half);
  CHECK(count_space(u_space) == CountClass::exactly(4));
  CHECK(count_space(v_space) == CountClass::exactly(4));
  CHECK(enumerate_cuts_finite(u_space).size() == 3);

  LinkJoinReport r = verify_link_join(f6, half, isolation_depth(f6));
  CHECK(r.ok);
  CHECK(r.link_size == 6);
  CHECK(r.factor_sizes[0] == 3);
  CHECK(r.factor_sizes[1] == 3);

  // Outermost cut of Finite(5): the two-point factor complex is empty.
  SpaceSpec f5 = SpaceSpec::finite(5);
  LinkJoinReport r5 = verify_link_join(f5, finite_cut(f5, {0, 1}), isolation_depth(f5));
  CHECK(r5.ok);
  CHECK(r5.factor_sizes[0] + r5.factor_sizes[1] == r5.link_size);
  CHECK((r5.factor_sizes[0] == 0 || r5.factor_sizes[1] == 0));

  LinkJoinReport rc = verify_link_join(SpaceSpec::cantor(),
                                       Cut::from_strings(SpaceSpec::cantor(), {"0"}), 3);
  CHECK(rc.ok);
}

TEST_CASE("validated prefix maps act on the bounded complex") {
  SpaceSpec cantor = SpaceSpec::cantor();
  PrefixMap swap = PrefixMap::from_pairs({{"00", "00"}, {"01", "10"}, {"10", "01"}, {"11", "11"}});
  ValidatedPrefixMap v = ValidatedPrefixMap::validate(swap, cantor, 2);
  std::vector<Cut> cuts = enumerate_cuts_bounded(cantor, 3);
  CutGraph g = CutGraph::build(cuts);
  // The swap maps depth-3 cuts to depth-3 cuts; the induced map is an
  // automorphism of the bounded complex.
  std::vector<int> perm;
  for (const Cut& c : cuts) {
    Cut image = Cut::from_side(apply_prefix_map(v, c.side(0)));
    auto idx = g.index_of(image);
    REQUIRE(idx.has_value());
    perm.push_back(*idx);
  }
  CHECK(is_graph_automorphism(g, perm));
}

TEST_CASE("exports are deterministic and consistent") {
  CutGraph petersen = CutGraph::build(enumerate_cuts_finite(SpaceSpec::finite(5)));
  std::string dot = graph_to_dot(petersen);
  std::string json_text = graph_to_json(petersen);
  CHECK(dot == graph_to_dot(petersen));
  CHECK(json_text == graph_to_json(petersen));
  // 10 labeled nodes and 15 edges in both formats.
  std::size_t labels = 0, edges = 0;
  for (std::size_t pos = 0; (pos = dot.find("label=", pos)) != std::string::npos; ++pos) ++labels;
  for (std::size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(labels == 10);
  CHECK(edges == 15);
  std::size_t json_edges = 0;
  for (std::size_t pos = 0; (pos = json_text.find("],[", pos)) != std::string::npos; ++pos)
    ++json_edges;
  CHECK(json_edges + 1 == 15);
}

TEST_CASE("oracle: BFS diameter matches all-pairs relaxation") {
  for (int n : {5, 6, 7}) {
    CutGraph g = CutGraph::build(enumerate_cuts_finite(SpaceSpec::finite(n)));
    const int v = g.size();
    const int inf_dist = 1 << 20;
    std::vector<std::vector<int>> d(static_cast<std::size_t>(v),
                                    std::vector<int>(static_cast<std::size_t>(v), inf_dist));
    for (int i = 0; i < v; ++i) {
      d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
      for (int j = 0; j < v; ++j)
        if (g.edge(i, j)) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    }
    for (int k = 0; k < v; ++k)
      for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j)
          d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::min(
              d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
              d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                  d[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
    int widest = 0;
    for (const auto& row : d)
      for (int x : row) widest = std::max(widest, x);
    auto result = g.diameter();
    REQUIRE(result.connected);
    CHECK(result.diameter == widest);
  }
}
