#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "knotcert/link_diagram.hpp"

namespace knotcert {

/// A simple closed curve meeting the diagram transversally in exactly two
/// points, away from crossings, with at least one crossing strictly on each
/// side. Such a curve demonstrates that the diagram is not prime.
///
/// The curve is recorded by the arcs it crosses: two distinct arcs bordering
/// the same unordered pair of faces (EdgePair), or one arc crossed twice with
/// both sides on the same face (SingleEdge). side_crossings counts crossings
/// on the two sides, the side containing crossing 0 first; both counts are
/// at least 1 for a genuine witness.
struct CutWitness {
  enum class Kind { EdgePair, SingleEdge };
  Kind kind = Kind::EdgePair;
  std::vector<std::uint32_t> arcs;  // ascending, size 1 or 2
  std::array<std::uint32_t, 2> side_crossings{0, 0};
};

/// What the cut search looked at; kept as replayable evidence that the search
/// was exhaustive when no witness exists.
struct CutSearchRecord {
  std::uint64_t pair_candidates = 0;
  std::uint64_t single_candidates = 0;
  bool searched = false;
};

struct PrimeCutResult {
  std::optional<CutWitness> witness;
  CutSearchRecord record;
};

/// Searches every simple closed curve meeting the diagram in two points for
/// one separating crossings from crossings. Candidates are the closed walks
/// of length <= 2 in the dual multigraph; a pair of arcs separates exactly
/// when removing both disconnects the crossing graph. Requires a connected
/// diagram with at least one crossing (throws std::invalid_argument
/// otherwise). When several witnesses exist the one with the most balanced
/// side counts wins, ties broken by lexicographically smallest arc pair.
PrimeCutResult search_prime_cut(const LinkDiagram& d);

/// The witness alone, or nullopt when every two-point curve has a
/// crossing-free side (the diagram is prime).
std::optional<CutWitness> find_prime_cut(const LinkDiagram& d);

/// Connected, has at least one crossing, and admits no cut witness.
/// Disconnected diagrams and the bare unknot are not prime.
bool is_prime_diagram(const LinkDiagram& d);

}  // namespace knotcert
