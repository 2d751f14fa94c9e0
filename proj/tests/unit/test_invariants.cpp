#include <random>

#include "doctest.h"
#include "knotcert/invariants.hpp"
#include "knotcert/plane_graph.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace knotcert;

namespace {
LinkDiagram from_pd(const char* text) { return pd_to_diagram(parse_pd(text)); }
}  // namespace

TEST_SUITE_BEGIN("invariants");

TEST_CASE("writhe") {
  CHECK(writhe(from_pd(fixtures::trefoil_pd)) == 3);
  CHECK(writhe(from_pd(fixtures::trefoil_mirror_pd)) == -3);
  CHECK(writhe(from_pd(fixtures::figure_eight_pd)) == 0);
  CHECK(writhe(from_pd(fixtures::hopf_pd)) == 2);
  CHECK(writhe(from_pd(fixtures::granny_pd)) == 6);
  CHECK(writhe(from_pd(fixtures::square_pd)) == 0);
  CHECK(writhe(from_pd(fixtures::l4a1_pd)) == 4);
  CHECK(writhe(from_pd("FREE_LOOPS=1")) == 0);
}

TEST_CASE("positivity search") {
  SUBCASE("already-positive diagrams") {
    const PositivityVerdict v = is_positive(from_pd(fixtures::trefoil_pd));
    REQUIRE(v.positive);
    CHECK(*v.witness_orientation == std::vector<bool>{false});
    CHECK_FALSE(v.obstruction_crossing.has_value());
  }

  SUBCASE("negative self-crossings are hard obstructions") {
    const PositivityVerdict m = is_positive(from_pd(fixtures::trefoil_mirror_pd));
    REQUIRE_FALSE(m.positive);
    CHECK(*m.obstruction_crossing == 0);

    const PositivityVerdict f8 = is_positive(from_pd(fixtures::figure_eight_pd));
    REQUIRE_FALSE(f8.positive);
    CHECK(*f8.obstruction_crossing == 0);

    // square knot: the mirrored factor starts at crossing 3
    const PositivityVerdict sq = is_positive(from_pd(fixtures::square_pd));
    REQUIRE_FALSE(sq.positive);
    CHECK(*sq.obstruction_crossing == 3);
  }

  SUBCASE("reorientation can rescue mixed clasps") {
    const LinkDiagram hopf = from_pd(fixtures::hopf_pd);
    const LinkDiagram reversed = reverse_components(hopf, {true, false});
    const PositivityVerdict v = is_positive(reversed);
    REQUIRE(v.positive);
    // ascending masks with component 0 pinned: the first success flips
    // component 1 back
    CHECK(*v.witness_orientation == std::vector<bool>{false, true});
  }

  SUBCASE("inter-component conflicts report a sample crossing") {
    const PositivityVerdict v =
        is_positive(braid_closure(parse_braid(fixtures::conflict_braid)));
    REQUIRE_FALSE(v.positive);
    CHECK(*v.obstruction_crossing == 1);
    CHECK_FALSE(v.witness_orientation.has_value());
  }

  SUBCASE("free loops ride along in the witness") {
    const PositivityVerdict v = is_positive(from_pd("FREE_LOOPS=1 X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"));
    REQUIRE(v.positive);
    CHECK(*v.witness_orientation == std::vector<bool>{false, false});
  }

  SUBCASE("crossing-free diagrams are vacuously positive") {
    const PositivityVerdict v = is_positive(from_pd("FREE_LOOPS=2"));
    REQUIRE(v.positive);
    CHECK(*v.witness_orientation == std::vector<bool>{false, false});
  }

  SUBCASE("the exhaustive search refuses absurd component counts") {
    LinkDiagram big = from_pd(fixtures::hopf_pd);
    for (int i = 0; i < 12; ++i)
      big = oracles::disjoint_union(big, from_pd(fixtures::hopf_pd));
    REQUIRE(big.arc_component_count == 26);
    CHECK_THROWS_AS(is_positive(big), std::invalid_argument);
  }
}

TEST_CASE("linking matrix") {
  SUBCASE("clasps and torus links") {
    const LinkingMatrix hopf = linking_matrix(from_pd(fixtures::hopf_pd));
    REQUIRE(hopf.components == 2);
    CHECK(hopf.at(0, 1) == 1);
    CHECK(hopf.at(1, 0) == 1);
    CHECK(hopf.at(0, 0) == 0);
    CHECK(hopf.at(1, 1) == 0);

    const LinkingMatrix l4 = linking_matrix(from_pd(fixtures::l4a1_pd));
    CHECK(l4.at(0, 1) == 2);

    const LinkingMatrix tre = linking_matrix(from_pd(fixtures::trefoil_pd));
    REQUIRE(tre.components == 1);
    CHECK(tre.at(0, 0) == 3);  // diagonal carries the self-writhe
  }

  SUBCASE("three-strand chain") {
    const LinkingMatrix m =
        linking_matrix(braid_closure(parse_braid("BR(3; 1 1 2 2 1 1 2 2)")));
    REQUIRE(m.components == 3);
    CHECK(m.at(0, 1) == 2);
    CHECK(m.at(1, 2) == 2);
    CHECK(m.at(0, 2) == 0);
  }

  SUBCASE("split pieces contribute zero blocks") {
    const LinkingMatrix m = linking_matrix(from_pd(fixtures::split_trefoils_pd));
    REQUIRE(m.components == 2);
    CHECK(m.at(0, 0) == 3);
    CHECK(m.at(1, 1) == 3);
    CHECK(m.at(0, 1) == 0);
  }

  SUBCASE("free loops occupy zero rows") {
    const LinkingMatrix m = linking_matrix(from_pd("FREE_LOOPS=1 X(4,1,3,2) X(2,3,1,4)"));
    REQUIRE(m.components == 3);
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(0, 2) == 0);
    CHECK(m.at(2, 2) == 0);
  }
}

TEST_CASE("linking graph connectivity") {
  CHECK(linking_graph_connected(linking_matrix(from_pd(fixtures::trefoil_pd))));
  CHECK(linking_graph_connected(linking_matrix(from_pd(fixtures::hopf_pd))));
  CHECK(linking_graph_connected(
      linking_matrix(braid_closure(parse_braid("BR(3; 1 1 2 2 1 1 2 2)")))));
  CHECK_FALSE(
      linking_graph_connected(linking_matrix(from_pd(fixtures::split_trefoils_pd))));
  CHECK_FALSE(linking_graph_connected(linking_matrix(from_pd("FREE_LOOPS=2"))));

  // block-diagonal counterexample: two clasps side by side
  const LinkDiagram two_hopfs = oracles::disjoint_union(
      from_pd(fixtures::hopf_pd), from_pd(fixtures::hopf_pd));
  REQUIRE(two_hopfs.component_count() == 4);
  CHECK_FALSE(linking_graph_connected(linking_matrix(two_hopfs)));
}

TEST_CASE("reversal symmetries of the linking matrix") {
  auto flip_all = [](const LinkDiagram& d) {
    return reverse_components(d, std::vector<bool>(d.component_count(), true));
  };

  SUBCASE("frozen cases") {
    const LinkDiagram l4 = from_pd(fixtures::l4a1_pd);
    CHECK(linking_matrix(flip_all(l4)).entries == linking_matrix(l4).entries);
    const LinkingMatrix one = linking_matrix(reverse_components(l4, {true, false}));
    CHECK(one.at(0, 1) == -2);
    CHECK(one.at(0, 0) == 0);
  }

  SUBCASE("random multi-component closures") {
    std::mt19937_64 rng(5150123);
    for (int i = 0; i < 120; ++i) {
      const LinkDiagram d = oracles::random_multi_closure(rng, false, 2);
      const LinkingMatrix base = linking_matrix(d);

      const LinkingMatrix global = linking_matrix(flip_all(d));
      CHECK(global.entries == base.entries);

      std::uniform_int_distribution<std::uint32_t> pick(0, d.component_count() - 1);
      const std::uint32_t target = pick(rng);
      std::vector<bool> flip(d.component_count(), false);
      flip[target] = true;
      const LinkingMatrix one = linking_matrix(reverse_components(d, flip));
      for (std::uint32_t r = 0; r < base.components; ++r) {
        for (std::uint32_t c = 0; c < base.components; ++c) {
          const bool touched = (r == target) != (c == target);
          CHECK(one.at(r, c) == (touched ? -base.at(r, c) : base.at(r, c)));
        }
      }
    }
  }
}

TEST_CASE("seifert circles and the canonical surface") {
  CHECK(seifert_circles(from_pd(fixtures::trefoil_pd)) == 2);
  CHECK(seifert_circles(from_pd(fixtures::figure_eight_pd)) == 3);
  CHECK(seifert_circles(from_pd(fixtures::hopf_pd)) == 2);
  CHECK(seifert_circles(from_pd(fixtures::granny_pd)) == 3);
  CHECK(seifert_circles(from_pd(fixtures::l4a1_pd)) == 4);
  CHECK(seifert_circles(from_pd(fixtures::positive_kink_pd)) == 2);
  CHECK(seifert_circles(from_pd("FREE_LOOPS=2")) == 2);

  CHECK(canonical_euler_characteristic(from_pd(fixtures::trefoil_pd)) == -1);
  CHECK(canonical_euler_characteristic(from_pd(fixtures::figure_eight_pd)) == -1);
  CHECK(canonical_euler_characteristic(from_pd(fixtures::granny_pd)) == -3);
  CHECK(canonical_euler_characteristic(from_pd(fixtures::positive_kink_pd)) == 1);
  CHECK(canonical_euler_characteristic(from_pd(fixtures::hopf_pd)) == 0);
  CHECK(canonical_euler_characteristic(from_pd("FREE_LOOPS=1")) == 1);

  CHECK_THROWS_AS(canonical_euler_characteristic(from_pd(fixtures::split_trefoils_pd)),
                  std::invalid_argument);
  CHECK_THROWS_AS(canonical_euler_characteristic(from_pd("FREE_LOOPS=2")),
                  std::invalid_argument);

  SUBCASE("positive braid closures match the closed formula") {
    // closure of a positive word on n strands with c letters: s = n, so
    // chi = n - c
    std::mt19937_64 rng(99123);
    for (int i = 0; i < 80; ++i) {
      std::uniform_int_distribution<std::uint32_t> strands(2, 4);
      std::uniform_int_distribution<std::uint32_t> len(2, 9);
      BraidWord w;
      w.strand_count = strands(rng);
      const std::uint32_t c = len(rng);
      std::uniform_int_distribution<std::int32_t> gen(
          1, static_cast<std::int32_t>(w.strand_count) - 1);
      for (std::uint32_t j = 0; j < c; ++j) w.letters.push_back(gen(rng));
      const LinkDiagram d = braid_closure(w);
      CHECK(seifert_circles(d) == w.strand_count);
      if (diagram_connected(d))
        CHECK(canonical_euler_characteristic(d) ==
              static_cast<int>(w.strand_count) - static_cast<int>(c));
    }
  }
}

TEST_SUITE_END();
