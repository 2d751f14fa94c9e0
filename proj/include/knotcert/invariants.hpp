#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "knotcert/link_diagram.hpp"

namespace knotcert {

/// Sum of crossing signs.
long long writhe(const LinkDiagram& d);

/// Outcome of the positivity search over component orientations.
///
/// Exactly one of witness_orientation / obstruction_crossing is present.
/// witness_orientation lists, per component, whether it must be reversed to
/// make every crossing positive (all-false means the input orientation
/// already works). obstruction_crossing is a negative self-crossing when one
/// exists (those stay negative under every orientation); otherwise it is the
/// lowest crossing that is negative under the input orientation, which every
/// orientation choice leaves negative somewhere nearby.
struct PositivityVerdict {
  bool positive = false;
  std::optional<std::vector<bool>> witness_orientation;
  std::optional<std::uint32_t> obstruction_crossing;
};

/// Decides whether some choice of component orientations makes every
/// crossing positive. Self-crossing signs never move under reorientation, so
/// any negative self-crossing short-circuits; otherwise all 2^(k-1)
/// assignments are tried with component 0 pinned. A diagram with no
/// crossings is vacuously positive. Throws std::invalid_argument beyond 25
/// components (the exhaustive search stops being a desk-scale computation).
PositivityVerdict is_positive(const LinkDiagram& d);

/// Symmetric k x k matrix over the link components (free loops included).
/// Off-diagonal entries are linking numbers, half the signed sum of
/// crossings between the two components; diagonal entries are self-writhes.
struct LinkingMatrix {
  std::uint32_t components = 0;
  std::vector<long long> entries;  // row-major

  long long at(std::uint32_t i, std::uint32_t j) const {
    return entries[static_cast<std::size_t>(i) * components + j];
  }
  long long& at(std::uint32_t i, std::uint32_t j) {
    return entries[static_cast<std::size_t>(i) * components + j];
  }
};

LinkingMatrix linking_matrix(const LinkDiagram& d);

/// Connectivity of the graph on components whose edges are the nonzero
/// off-diagonal entries. A one-component diagram is trivially connected.
bool linking_graph_connected(const LinkingMatrix& m);

/// Number of circles produced by smoothing every crossing respecting
/// orientation, free loops included.
std::uint32_t seifert_circles(const LinkDiagram& d);

/// Euler characteristic s - c of the surface obtained from the Seifert
/// circles by attaching one band per crossing. Requires a connected diagram
/// (throws std::invalid_argument otherwise). For a knot diagram the surface
/// genus is (1 - chi) / 2.
int canonical_euler_characteristic(const LinkDiagram& d);

}  // namespace knotcert
