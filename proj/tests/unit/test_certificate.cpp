#include <random>

#include "doctest.h"
#include "knotcert/certificate.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace knotcert;

namespace {
LinkDiagram from_pd(const char* text) { return pd_to_diagram(parse_pd(text)); }
}  // namespace

TEST_SUITE_BEGIN("certification");

TEST_CASE("positive connected prime knot") {
  const LinkDiagram d = from_pd(fixtures::trefoil_pd);
  const Certificate cert = certify(d, false);
  CHECK(cert.positivity.positive);
  CHECK(cert.connectivity);
  CHECK(cert.diagram_prime);
  CHECK(cert.nontrivial.status == NontrivialStatus::Certified);
  CHECK(cert.nontrivial.evidence.genus_criterion);
  CHECK(*cert.nontrivial.evidence.euler_characteristic == -1);
  CHECK(cert.splitness == Splitness::NonsplitCertified);
  CHECK(cert.primeness == Primeness::PrimeCertified);
  CHECK(cert.linking_graph_witness);
  CHECK(cert.invariants.genus == 1);
  CHECK(validate_certificate(d, cert).empty());
}

TEST_CASE("positive clasp certifies through the canonical surface") {
  const LinkDiagram d = from_pd(fixtures::hopf_pd);
  const Certificate cert = certify(d, false);
  CHECK(cert.nontrivial.status == NontrivialStatus::Certified);
  CHECK(cert.nontrivial.evidence.genus_criterion);
  CHECK(*cert.nontrivial.evidence.euler_characteristic == 0);
  // the nonzero linking pair is recorded as supplementary evidence
  REQUIRE(cert.nontrivial.evidence.linking_pair.has_value());
  CHECK(*cert.nontrivial.evidence.linking_pair == std::array<std::uint32_t, 2>{0, 1});
  CHECK(*cert.nontrivial.evidence.linking_value == 1);
  CHECK(cert.splitness == Splitness::NonsplitCertified);
  CHECK(cert.primeness == Primeness::PrimeCertified);
  CHECK(validate_certificate(d, cert).empty());
}

TEST_CASE("composite positive knot stays inconclusive on primeness") {
  const LinkDiagram d = from_pd(fixtures::granny_pd);
  const Certificate cert = certify(d, false);
  CHECK(cert.positivity.positive);
  CHECK_FALSE(cert.diagram_prime);
  REQUIRE(cert.cut.has_value());
  CHECK(cert.cut->arcs == std::vector<std::uint32_t>{0, 6});
  CHECK(cert.nontrivial.status == NontrivialStatus::Certified);
  CHECK(cert.splitness == Splitness::NonsplitCertified);
  CHECK(cert.primeness == Primeness::Inconclusive);
  CHECK(validate_certificate(d, cert).empty());
}

TEST_CASE("non-positive diagrams certify nothing without linking") {
  const LinkDiagram d = from_pd(fixtures::square_pd);
  const Certificate cert = certify(d, false);
  CHECK_FALSE(cert.positivity.positive);
  CHECK(cert.nontrivial.status == NontrivialStatus::NotCertified);
  CHECK(cert.splitness == Splitness::Inconclusive);
  CHECK(cert.primeness == Primeness::Inconclusive);
  CHECK(validate_certificate(d, cert).empty());
}

TEST_CASE("nonzero linking certifies even when disconnected") {
  const LinkDiagram two_hopfs = oracles::disjoint_union(
      from_pd(fixtures::hopf_pd), from_pd(fixtures::hopf_pd));
  const Certificate cert = certify(two_hopfs, false);
  CHECK_FALSE(cert.connectivity);
  CHECK(cert.splitness == Splitness::SplitCertified);
  CHECK(cert.nontrivial.status == NontrivialStatus::Certified);
  CHECK_FALSE(cert.nontrivial.evidence.genus_criterion);
  REQUIRE(cert.nontrivial.evidence.linking_pair.has_value());
  CHECK(*cert.nontrivial.evidence.linking_pair ==
        std::array<std::uint32_t, 2>{0, 1});
  CHECK(cert.primeness == Primeness::Inconclusive);
  CHECK_FALSE(cert.linking_graph_witness);
  CHECK(validate_certificate(two_hopfs, cert).empty());
}

TEST_CASE("splitness and free loops") {
  const LinkDiagram d = from_pd(fixtures::split_trefoils_pd);
  const Certificate cert = certify(d, false);
  CHECK(cert.splitness == Splitness::SplitCertified);
  CHECK(cert.nontrivial.status == NontrivialStatus::NotCertified);
  CHECK_FALSE(cert.cut_search.searched);
  CHECK(validate_certificate(d, cert).empty());

  // adding a far-away circle to a certified diagram flips it to split
  const LinkDiagram spoiled = from_pd("FREE_LOOPS=1 X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
  const Certificate c2 = certify(spoiled, false);
  CHECK(c2.splitness == Splitness::SplitCertified);
  CHECK(c2.primeness == Primeness::Inconclusive);
  CHECK(validate_certificate(spoiled, c2).empty());
}

TEST_CASE("the assumption flag fills only the gap") {
  const LinkDiagram d = braid_closure(parse_braid(fixtures::conflict_braid));

  const Certificate honest = certify(d, false);
  CHECK(honest.nontrivial.status == NontrivialStatus::NotCertified);

  const Certificate assumed = certify(d, true);
  CHECK(assumed.nontrivial.status == NontrivialStatus::AssertedByFlag);
  CHECK(assumed.nontrivial.evidence.assumed_by_flag);
  CHECK(assumed.primeness == Primeness::Inconclusive);  // still not positive
  CHECK(validate_certificate(d, assumed).empty());

  // the flag never overrides an internal certification
  const LinkDiagram tre = from_pd(fixtures::trefoil_pd);
  const Certificate both = certify(tre, true);
  CHECK(both.nontrivial.status == NontrivialStatus::Certified);
  CHECK(both.primeness == Primeness::PrimeCertified);
  CHECK(validate_certificate(tre, both).empty());
}

TEST_CASE("kinked unknot is positive but not certified nontrivial") {
  const LinkDiagram d = from_pd(fixtures::positive_kink_pd);
  const Certificate cert = certify(d, false);
  CHECK(cert.positivity.positive);
  CHECK(cert.nontrivial.status == NontrivialStatus::NotCertified);
  CHECK(cert.splitness == Splitness::NonsplitCertified);
  CHECK(cert.primeness == Primeness::Inconclusive);
  CHECK(validate_certificate(d, cert).empty());
}

TEST_CASE("summary invariants") {
  const DiagramSummary s = summarize(from_pd(fixtures::trefoil_pd));
  CHECK(s.crossings == 3);
  CHECK(s.components == 1);
  CHECK(s.free_loops == 0);
  CHECK(s.writhe == 3);
  CHECK(s.seifert_circles == 2);
  CHECK(*s.euler_characteristic == -1);
  CHECK(*s.genus == 1);
  CHECK(s.bridge_count == 3);

  const DiagramSummary split = summarize(from_pd(fixtures::split_trefoils_pd));
  CHECK_FALSE(split.euler_characteristic.has_value());
  CHECK_FALSE(split.genus.has_value());

  const DiagramSummary link = summarize(from_pd(fixtures::hopf_pd));
  CHECK(*link.euler_characteristic == 0);
  CHECK_FALSE(link.genus.has_value());  // genus only for knots
}

TEST_CASE("certificate json is frozen") {
  const Certificate cert = certify(from_pd(fixtures::trefoil_pd), false);
  const std::string expected =
      "{\"positivity\":{\"positive\":true,\"witness_orientation\":[false],"
      "\"obstruction_crossing\":null},\"connectivity\":true,"
      "\"diagram_prime\":{\"prime\":true,\"cut\":null,\"search\":{"
      "\"pair_candidates\":0,\"single_candidates\":0,\"searched\":true}},"
      "\"nontrivial\":{\"status\":\"certified\",\"rule\":\"positive-genus\"},"
      "\"splitness\":\"nonsplit-certified\",\"primeness\":\"prime-certified\","
      "\"invariants\":{\"crossings\":3,\"components\":1,\"free_loops\":0,"
      "\"writhe\":3,\"linking_matrix\":[[3]],\"seifert_circles\":2,"
      "\"euler_characteristic\":-1,\"genus\":1,\"bridge_number\":3},"
      "\"evidence\":{\"nontrivial\":{\"genus_criterion\":true,"
      "\"euler_characteristic\":-1,\"linking_pair\":null,"
      "\"linking_value\":null,\"assumed_by_flag\":false},"
      "\"splitness_rule\":\"connected-positive\","
      "\"primeness_rule\":\"connected-positive-prime-nontrivial\","
      "\"linking_graph_connected\":true,\"assume_nontrivial\":false}}";
  CHECK(certificate_to_json(cert).dump() == expected);
}

TEST_CASE("validator rejects every single-field corruption") {
  const LinkDiagram tre = from_pd(fixtures::trefoil_pd);
  const LinkDiagram granny = from_pd(fixtures::granny_pd);
  const LinkDiagram hopf = from_pd(fixtures::hopf_pd);
  const Certificate base = certify(tre, false);

  SUBCASE("positivity flip") {
    Certificate c = base;
    c.positivity.positive = false;
    c.positivity.witness_orientation.reset();
    c.positivity.obstruction_crossing = 0;
    CHECK_FALSE(validate_certificate(tre, c).empty());
  }
  SUBCASE("missing witness") {
    Certificate c = base;
    c.positivity.witness_orientation.reset();
    CHECK_FALSE(validate_certificate(tre, c).empty());
  }
  SUBCASE("wrong-size witness") {
    Certificate c = base;
    c.positivity.witness_orientation = std::vector<bool>{false, true};
    CHECK_FALSE(validate_certificate(tre, c).empty());
  }
  SUBCASE("witness that leaves a crossing negative") {
    const LinkDiagram reversed = reverse_components(hopf, {true, false});
    Certificate c = certify(reversed, false);
    c.positivity.witness_orientation = std::vector<bool>{false, false};
    CHECK_FALSE(validate_certificate(reversed, c).empty());
  }
  SUBCASE("connectivity flip") {
    Certificate c = base;
    c.connectivity = false;
    CHECK_FALSE(validate_certificate(tre, c).empty());
  }
  SUBCASE("prime flag against a recorded cut") {
    Certificate c = certify(granny, false);
    c.diagram_prime = true;
    CHECK_FALSE(validate_certificate(granny, c).empty());
  }
  SUBCASE("cut arcs that do not separate") {
    Certificate c = certify(granny, false);
    c.cut->arcs = {0, 1};
    CHECK_FALSE(validate_certificate(granny, c).empty());
  }
  SUBCASE("cut sides miscounted") {
    Certificate c = certify(granny, false);
    c.cut->side_crossings = {2, 4};
    CHECK_FALSE(validate_certificate(granny, c).empty());
  }
  SUBCASE("invented cut on a prime diagram") {
    Certificate c = base;
    c.diagram_prime = false;
    CutWitness w;
    w.arcs = {0, 3};
    w.side_crossings = {1, 2};
    c.cut = w;
    CHECK_FALSE(validate_certificate(tre, c).empty());
  }
  SUBCASE("status upgrade") {
    Certificate c = certify(braid_closure(parse_braid(fixtures::conflict_braid)), false);
    c.nontrivial.status = NontrivialStatus::Certified;
    CHECK_FALSE(
        validate_certificate(braid_closure(parse_braid(fixtures::conflict_braid)), c)
            .empty());
  }
  SUBCASE("status downgrade") {
    Certificate c = base;
    c.nontrivial.status = NontrivialStatus::NotCertified;
    CHECK_FALSE(validate_certificate(tre, c).empty());
  }
  SUBCASE("evidence euler characteristic tweak") {
    Certificate c = base;
    c.nontrivial.evidence.euler_characteristic = 1;
    CHECK_FALSE(validate_certificate(tre, c).empty());
  }
  SUBCASE("linking evidence tweak") {
    Certificate c = certify(hopf, false);
    c.nontrivial.evidence.linking_value = 7;
    CHECK_FALSE(validate_certificate(hopf, c).empty());
  }
  SUBCASE("splitness swap") {
    Certificate c = base;
    c.splitness = Splitness::SplitCertified;
    CHECK_FALSE(validate_certificate(tre, c).empty());
  }
  SUBCASE("primeness swap") {
    Certificate c = certify(granny, false);
    c.primeness = Primeness::PrimeCertified;
    CHECK_FALSE(validate_certificate(granny, c).empty());
  }
  SUBCASE("assumption flag flip") {
    const LinkDiagram d = braid_closure(parse_braid(fixtures::conflict_braid));
    Certificate c = certify(d, true);
    REQUIRE(c.nontrivial.status == NontrivialStatus::AssertedByFlag);
    c.assume_nontrivial = false;
    CHECK_FALSE(validate_certificate(d, c).empty());
  }
  SUBCASE("invariant tweak") {
    Certificate c = base;
    c.invariants.writhe = -3;
    CHECK_FALSE(validate_certificate(tre, c).empty());
  }
}

TEST_CASE("valid certificates replay cleanly across the corpus") {
  const char* corpus[] = {
      fixtures::trefoil_pd,     fixtures::trefoil_mirror_pd,
      fixtures::figure_eight_pd, fixtures::hopf_pd,
      fixtures::l4a1_pd,        fixtures::granny_pd,
      fixtures::square_pd,      fixtures::trefoil_kink_pd,
      fixtures::split_trefoils_pd, fixtures::flat_unlink_pd,
      fixtures::positive_kink_pd, fixtures::negative_kink_pd,
  };
  for (const char* text : corpus) {
    CAPTURE(text);
    const LinkDiagram d = from_pd(text);
    for (const bool flag : {false, true}) {
      const Certificate cert = certify(d, flag);
      const auto problems = validate_certificate(d, cert);
      if (!problems.empty()) CAPTURE(problems.front());
      CHECK(problems.empty());
    }
  }

  std::mt19937_64 rng(8181818);
  for (int i = 0; i < 150; ++i) {
    const LinkDiagram d = oracles::random_closure(rng, false);
    CAPTURE(to_pd_text(to_pd(d)));
    const Certificate cert = certify(d, i % 2 == 0);
    const auto problems = validate_certificate(d, cert);
    if (!problems.empty()) CAPTURE(problems.front());
    CHECK(problems.empty());
  }
}

TEST_SUITE_END();
