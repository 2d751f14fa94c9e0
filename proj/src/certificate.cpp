#include "knotcert/certificate.hpp"

#include <algorithm>
#include <utility>

#include "knotcert/bridges.hpp"
#include "knotcert/plane_graph.hpp"

namespace knotcert {

std::string to_string(NontrivialStatus s) {
  switch (s) {
    case NontrivialStatus::Certified:
      return "certified";
    case NontrivialStatus::NotCertified:
      return "not-certified";
    case NontrivialStatus::AssertedByFlag:
      return "asserted-by-flag";
  }
  return "?";
}

std::string to_string(Splitness s) {
  switch (s) {
    case Splitness::SplitCertified:
      return "split-certified";
    case Splitness::NonsplitCertified:
      return "nonsplit-certified";
    case Splitness::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string to_string(Primeness s) {
  switch (s) {
    case Primeness::PrimeCertified:
      return "prime-certified";
    case Primeness::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

DiagramSummary summarize(const LinkDiagram& d) {
  DiagramSummary inv;
  inv.crossings = d.crossing_count();
  inv.components = d.component_count();
  inv.free_loops = d.free_loops;
  inv.writhe = writhe(d);
  inv.linking = linking_matrix(d);
  inv.seifert_circles = seifert_circles(d);
  if (diagram_connected(d)) {
    inv.euler_characteristic = canonical_euler_characteristic(d);
    if (d.component_count() == 1)
      inv.genus = (1 - *inv.euler_characteristic) / 2;
  }
  inv.bridge_count = bridge_number(d);
  return inv;
}

NontrivialVerdict check_nontrivial(const LinkDiagram& d, bool assume_flag,
                                   const PositivityVerdict& positivity) {
  NontrivialVerdict v;
  if (diagram_connected(d) && positivity.positive) {
    // a positive diagram's canonical surface realizes the minimal genus, so
    // anything below the disk bound is certainly knotted
    const LinkDiagram w = positivity.witness_orientation
                              ? reverse_components(
                                    d, *positivity.witness_orientation)
                              : d;
    const int chi = canonical_euler_characteristic(w);
    v.evidence.euler_characteristic = chi;
    if (chi < static_cast<int>(d.component_count()))
      v.evidence.genus_criterion = true;
  }
  const LinkingMatrix m = linking_matrix(d);
  for (std::uint32_t i = 0; i < m.components && !v.evidence.linking_pair; ++i) {
    for (std::uint32_t j = i + 1; j < m.components; ++j) {
      if (m.at(i, j) != 0) {
        v.evidence.linking_pair = {{i, j}};
        v.evidence.linking_value = m.at(i, j);
        break;
      }
    }
  }
  if (v.evidence.genus_criterion || v.evidence.linking_pair) {
    v.status = NontrivialStatus::Certified;
  } else if (assume_flag) {
    v.status = NontrivialStatus::AssertedByFlag;
    v.evidence.assumed_by_flag = true;
  } else {
    v.status = NontrivialStatus::NotCertified;
  }
  return v;
}

Certificate certify(const LinkDiagram& d, bool assume_nontrivial) {
  Certificate cert;
  cert.assume_nontrivial = assume_nontrivial;
  cert.positivity = is_positive(d);
  cert.connectivity = diagram_connected(d);
  if (cert.connectivity && d.crossing_count() > 0) {
    PrimeCutResult r = search_prime_cut(d);
    cert.cut = std::move(r.witness);
    cert.cut_search = r.record;
    cert.diagram_prime = !cert.cut.has_value();
  }
  cert.nontrivial = check_nontrivial(d, assume_nontrivial, cert.positivity);

  cert.splitness = !cert.connectivity ? Splitness::SplitCertified
                   : cert.positivity.positive ? Splitness::NonsplitCertified
                                              : Splitness::Inconclusive;
  const bool nontrivial =
      cert.nontrivial.status == NontrivialStatus::Certified ||
      cert.nontrivial.status == NontrivialStatus::AssertedByFlag;
  cert.primeness = (cert.positivity.positive && cert.connectivity &&
                    cert.diagram_prime && nontrivial)
                       ? Primeness::PrimeCertified
                       : Primeness::Inconclusive;

  cert.invariants = summarize(d);
  cert.linking_graph_witness = linking_graph_connected(cert.invariants.linking);
  return cert;
}

nlohmann::ordered_json invariants_to_json(const DiagramSummary& inv) {
  nlohmann::ordered_json j;
  j["crossings"] = inv.crossings;
  j["components"] = inv.components;
  j["free_loops"] = inv.free_loops;
  j["writhe"] = inv.writhe;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::uint32_t i = 0; i < inv.linking.components; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::uint32_t k = 0; k < inv.linking.components; ++k)
      row.push_back(inv.linking.at(i, k));
    rows.push_back(std::move(row));
  }
  j["linking_matrix"] = std::move(rows);
  j["seifert_circles"] = inv.seifert_circles;
  if (inv.euler_characteristic)
    j["euler_characteristic"] = *inv.euler_characteristic;
  else
    j["euler_characteristic"] = nullptr;
  if (inv.genus)
    j["genus"] = *inv.genus;
  else
    j["genus"] = nullptr;
  j["bridge_number"] = inv.bridge_count;
  return j;
}

namespace {

nlohmann::ordered_json cut_to_json(const std::optional<CutWitness>& cut) {
  if (!cut) return nullptr;
  nlohmann::ordered_json j;
  j["kind"] =
      cut->kind == CutWitness::Kind::EdgePair ? "edge-pair" : "single-edge";
  j["arcs"] = cut->arcs;
  j["side_crossings"] = {cut->side_crossings[0], cut->side_crossings[1]};
  return j;
}

}  // namespace

nlohmann::ordered_json certificate_to_json(const Certificate& cert) {
  nlohmann::ordered_json j;

  nlohmann::ordered_json pos;
  pos["positive"] = cert.positivity.positive;
  if (cert.positivity.witness_orientation) {
    pos["witness_orientation"] = *cert.positivity.witness_orientation;
  } else {
    pos["witness_orientation"] = nullptr;
  }
  if (cert.positivity.obstruction_crossing) {
    pos["obstruction_crossing"] = *cert.positivity.obstruction_crossing;
  } else {
    pos["obstruction_crossing"] = nullptr;
  }
  j["positivity"] = std::move(pos);

  j["connectivity"] = cert.connectivity;

  nlohmann::ordered_json dp;
  dp["prime"] = cert.diagram_prime;
  dp["cut"] = cut_to_json(cert.cut);
  nlohmann::ordered_json search;
  search["pair_candidates"] = cert.cut_search.pair_candidates;
  search["single_candidates"] = cert.cut_search.single_candidates;
  search["searched"] = cert.cut_search.searched;
  dp["search"] = std::move(search);
  j["diagram_prime"] = std::move(dp);

  nlohmann::ordered_json nt;
  nt["status"] = to_string(cert.nontrivial.status);
  const NontrivialEvidence& ev = cert.nontrivial.evidence;
  if (ev.genus_criterion)
    nt["rule"] = "positive-genus";
  else if (ev.linking_pair)
    nt["rule"] = "nonzero-linking";
  else if (ev.assumed_by_flag)
    nt["rule"] = "assumed";
  else
    nt["rule"] = nullptr;
  j["nontrivial"] = std::move(nt);

  j["splitness"] = to_string(cert.splitness);
  j["primeness"] = to_string(cert.primeness);
  j["invariants"] = invariants_to_json(cert.invariants);

  nlohmann::ordered_json e;
  nlohmann::ordered_json ent;
  ent["genus_criterion"] = ev.genus_criterion;
  if (ev.euler_characteristic)
    ent["euler_characteristic"] = *ev.euler_characteristic;
  else
    ent["euler_characteristic"] = nullptr;
  if (ev.linking_pair) {
    ent["linking_pair"] = {(*ev.linking_pair)[0], (*ev.linking_pair)[1]};
    ent["linking_value"] = *ev.linking_value;
  } else {
    ent["linking_pair"] = nullptr;
    ent["linking_value"] = nullptr;
  }
  ent["assumed_by_flag"] = ev.assumed_by_flag;
  e["nontrivial"] = std::move(ent);
  if (cert.splitness == Splitness::SplitCertified)
    e["splitness_rule"] = "disconnected";
  else if (cert.splitness == Splitness::NonsplitCertified)
    e["splitness_rule"] = "connected-positive";
  else
    e["splitness_rule"] = nullptr;
  if (cert.primeness == Primeness::PrimeCertified)
    e["primeness_rule"] = "connected-positive-prime-nontrivial";
  else
    e["primeness_rule"] = nullptr;
  e["linking_graph_connected"] = cert.linking_graph_witness;
  e["assume_nontrivial"] = cert.assume_nontrivial;
  j["evidence"] = std::move(e);

  return j;
}

std::vector<std::string> validate_certificate(const LinkDiagram& d,
                                              const Certificate& cert) {
  std::vector<std::string> out;

  // recompute everything and compare block by block
  const nlohmann::ordered_json claimed = certificate_to_json(cert);
  const nlohmann::ordered_json fresh =
      certificate_to_json(certify(d, cert.assume_nontrivial));
  for (auto it = fresh.begin(); it != fresh.end(); ++it) {
    if (!claimed.contains(it.key()) || claimed.at(it.key()) != it.value())
      out.push_back("field '" + it.key() + "' does not match this diagram");
  }

  // replay the recorded evidence directly for sharper diagnostics
  const std::uint32_t c = d.crossing_count();
  if (cert.positivity.positive) {
    if (!cert.positivity.witness_orientation) {
      out.push_back("positive verdict without a witness orientation");
    } else if (cert.positivity.witness_orientation->size() !=
               d.component_count()) {
      out.push_back("witness orientation has the wrong number of components");
    } else {
      const LinkDiagram w =
          reverse_components(d, *cert.positivity.witness_orientation);
      for (std::uint32_t i = 0; i < c; ++i) {
        if (crossing_sign(w, i) < 0) {
          out.push_back("witness orientation leaves crossing " +
                        std::to_string(i) + " negative");
          break;
        }
      }
    }
  } else if (!cert.positivity.obstruction_crossing) {
    out.push_back("negative verdict without an obstruction crossing");
  } else if (*cert.positivity.obstruction_crossing >= c) {
    out.push_back("obstruction crossing out of range");
  }

  if (cert.splitness == Splitness::SplitCertified && diagram_connected(d))
    out.push_back("split-certified on a connected diagram");
  if (cert.splitness == Splitness::NonsplitCertified &&
      !(diagram_connected(d) && cert.positivity.positive))
    out.push_back("nonsplit-certified without the connected-positive rule");
  if (cert.primeness == Primeness::PrimeCertified) {
    const bool nontrivial =
        cert.nontrivial.status == NontrivialStatus::Certified ||
        cert.nontrivial.status == NontrivialStatus::AssertedByFlag;
    if (!(cert.positivity.positive && cert.connectivity &&
          cert.diagram_prime && nontrivial))
      out.push_back("prime-certified without all four hypotheses");
  }

  if (cert.diagram_prime && cert.cut)
    out.push_back("prime flag set alongside a cut witness");
  if (cert.cut) {
    const CutWitness& w = *cert.cut;
    if (w.kind == CutWitness::Kind::SingleEdge) {
      out.push_back(
          "single-arc curves never separate crossings in a connected diagram");
    } else if (w.arcs.size() != 2 || w.arcs[0] >= w.arcs[1] ||
               w.arcs[1] >= d.arc_count()) {
      out.push_back("cut witness arcs malformed");
    } else {
      const FaceSet faces = trace_faces(build_plane_graph(d));
      const auto k0 = std::minmax(faces.face_of[w.arcs[0]][0],
                                  faces.face_of[w.arcs[0]][1]);
      const auto k1 = std::minmax(faces.face_of[w.arcs[1]][0],
                                  faces.face_of[w.arcs[1]][1]);
      if (k0 != k1)
        out.push_back("cut arcs do not border a common face pair");
      if (w.side_crossings[0] == 0 || w.side_crossings[1] == 0)
        out.push_back("cut witness has a crossing-free side");
      // replay the split itself
      std::vector<std::uint32_t> reach(c, 0);
      std::vector<std::uint32_t> stack = {0};
      reach[0] = 1;
      while (!stack.empty()) {
        const std::uint32_t v = stack.back();
        stack.pop_back();
        for (std::uint32_t a = 0; a < d.arc_count(); ++a) {
          if (a == w.arcs[0] || a == w.arcs[1]) continue;
          const auto& arc = d.arcs[a];
          if (arc.tail.crossing != v && arc.head.crossing != v) continue;
          const std::uint32_t u =
              arc.tail.crossing == v ? arc.head.crossing : arc.tail.crossing;
          if (!reach[u]) {
            reach[u] = 1;
            stack.push_back(u);
          }
        }
      }
      std::uint32_t with_zero = 0;
      for (const std::uint32_t r : reach) with_zero += r;
      if (with_zero != w.side_crossings[0] ||
          c - with_zero != w.side_crossings[1])
        out.push_back("cut witness does not split the crossings as recorded");
    }
  }

  const NontrivialEvidence& ev = cert.nontrivial.evidence;
  if (cert.nontrivial.status == NontrivialStatus::Certified &&
      !(ev.genus_criterion || ev.linking_pair))
    out.push_back("nontrivial certified without evidence");
  if (cert.nontrivial.status == NontrivialStatus::AssertedByFlag &&
      !cert.assume_nontrivial)
    out.push_back("asserted-by-flag without the assumption flag");
  if (ev.genus_criterion) {
    if (!(cert.positivity.positive && diagram_connected(d))) {
      out.push_back("genus evidence without the connected-positive rule");
    } else if (!ev.euler_characteristic) {
      out.push_back("genus evidence without an euler characteristic");
    } else if (cert.positivity.witness_orientation &&
               cert.positivity.witness_orientation->size() ==
                   d.component_count()) {
      const LinkDiagram w =
          reverse_components(d, *cert.positivity.witness_orientation);
      const int chi = canonical_euler_characteristic(w);
      if (chi != *ev.euler_characteristic)
        out.push_back("recorded euler characteristic does not replay");
      if (*ev.euler_characteristic >= static_cast<int>(d.component_count()))
        out.push_back(
            "recorded euler characteristic does not certify nontriviality");
    }
  }
  if (ev.linking_pair) {
    const auto [i, k] = *ev.linking_pair;
    const LinkingMatrix m = linking_matrix(d);
    if (i >= m.components || k >= m.components || i == k) {
      out.push_back("linking evidence pair out of range");
    } else if (!ev.linking_value || m.at(i, k) != *ev.linking_value ||
               m.at(i, k) == 0) {
      out.push_back("linking evidence does not replay");
    }
  }

  return out;
}

}  // namespace knotcert
