#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "knotcert/invariants.hpp"
#include "knotcert/link_diagram.hpp"
#include "knotcert/prime_cut.hpp"

namespace knotcert {

enum class NontrivialStatus { Certified, NotCertified, AssertedByFlag };

/// Why (or on whose word) the link is known nontrivial. For a positive
/// connected diagram the canonical Seifert surface realizes the minimal
/// genus, so euler_characteristic < component count certifies nontriviality;
/// a nonzero linking number certifies it unconditionally.
struct NontrivialEvidence {
  bool genus_criterion = false;
  /// chi of the canonical surface, computed under the positivity witness
  /// orientation; present when the diagram is connected and positive.
  std::optional<int> euler_characteristic;
  std::optional<std::array<std::uint32_t, 2>> linking_pair;
  std::optional<long long> linking_value;
  bool assumed_by_flag = false;
};

struct NontrivialVerdict {
  NontrivialStatus status = NontrivialStatus::NotCertified;
  NontrivialEvidence evidence;
};

/// Split-certified needs a disconnected diagram (a circle separating the
/// pieces is itself a splitting sphere). Nonsplit-certified needs the
/// connected-positive rule. There is no "non-prime certified": failing the
/// prime test only yields inconclusive.
enum class Splitness { SplitCertified, NonsplitCertified, Inconclusive };
enum class Primeness { PrimeCertified, Inconclusive };

/// Invariants reported alongside the verdicts, all computed under the input
/// orientation. euler_characteristic and genus need a connected diagram
/// (genus additionally a knot); they stay empty otherwise.
struct DiagramSummary {
  std::uint32_t crossings = 0;
  std::uint32_t components = 0;
  std::uint32_t free_loops = 0;
  long long writhe = 0;
  LinkingMatrix linking;
  std::uint32_t seifert_circles = 0;
  std::optional<int> euler_characteristic;
  std::optional<int> genus;
  std::uint32_t bridge_count = 0;
};

/// Everything certify() concluded about one diagram, with enough evidence to
/// replay each conclusion: the positivity witness or obstruction, the cut
/// witness or the exhaustion record, the nontriviality evidence, and the
/// hypotheses each certified verdict rests on.
struct Certificate {
  PositivityVerdict positivity;
  bool connectivity = false;
  bool diagram_prime = false;
  std::optional<CutWitness> cut;
  CutSearchRecord cut_search;
  NontrivialVerdict nontrivial;
  Splitness splitness = Splitness::Inconclusive;
  Primeness primeness = Primeness::Inconclusive;
  /// Independent algebraic witness: the nonzero-linking graph is connected.
  bool linking_graph_witness = false;
  DiagramSummary invariants;
  bool assume_nontrivial = false;
};

/// The invariants block of a diagram, computed under its input orientation.
DiagramSummary summarize(const LinkDiagram& d);

/// Decides nontriviality from the genus criterion, the linking numbers, or
/// the caller's assume flag (in that order of authority). The positivity
/// verdict must belong to the same diagram.
NontrivialVerdict check_nontrivial(const LinkDiagram& d, bool assume_flag,
                                   const PositivityVerdict& positivity);

/// Runs the whole pipeline and assembles the certificate.
///
///   split-certified      <=  diagram disconnected
///   nonsplit-certified   <=  connected and positive
///   prime-certified      <=  connected, positive, prime diagram, nontrivial
///
/// Everything else is inconclusive. Certified never means "certified false";
/// a diagram that fails a hypothesis simply stays inconclusive.
Certificate certify(const LinkDiagram& d, bool assume_nontrivial);

/// Replays a certificate against its diagram: recomputes every field,
/// re-checks the hypothesis gates of each certified verdict, and re-derives
/// the witnesses (witness orientation must make every crossing positive, cut
/// arcs must split the crossing graph into the recorded counts, the linking
/// pair must have its recorded nonzero value). Returns human-readable
/// descriptions of every violation; empty means the certificate is valid.
std::vector<std::string> validate_certificate(const LinkDiagram& d,
                                              const Certificate& cert);

/// JSON forms (stable key order). certificate_to_json carries everything a
/// report record holds except the input echo and schema tag.
nlohmann::ordered_json certificate_to_json(const Certificate& cert);
nlohmann::ordered_json invariants_to_json(const DiagramSummary& inv);

std::string to_string(NontrivialStatus s);
std::string to_string(Splitness s);
std::string to_string(Primeness s);

}  // namespace knotcert
