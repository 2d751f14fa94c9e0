#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotcert/pd_code.hpp"

namespace knotcert {

/// Error thrown when input codes describe something that is not an oriented
/// diagram on the 2-sphere (orientation conflicts, bad incidence, positive
/// genus).
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// One end of an arc: the crossing it attaches to and the slot (0..3) it
/// occupies there.
struct ArcEnd {
  std::uint32_t crossing = 0;
  std::uint8_t slot = 0;
};

/// A crossing with its four arc ends in counterclockwise slot order.
///
/// Slots are normalized so that slot 0 always holds the incoming under-strand
/// end and slot 2 the outgoing one; slots 1 and 3 hold the over strand, one
/// incoming and one outgoing. incoming[s] is true when the arc in slot s is
/// oriented into the crossing. The crossing sign is +1 exactly when the over
/// strand comes in at slot 1 (quarter-turn rule: rotating the under-strand
/// direction counterclockwise by 90 degrees aligns it with the over-strand
/// direction).
struct Crossing {
  std::array<std::uint32_t, 4> arc{};
  std::array<bool, 4> incoming{};
};

/// An oriented arc between two crossing passages (possibly the same
/// crossing). successor is the arc reached by entering the crossing at this
/// arc's head and leaving on the same strand; its orbits are the link
/// components.
struct Arc {
  ArcEnd tail;  // where the arc leaves a crossing
  ArcEnd head;  // where the arc enters a crossing
  std::uint32_t successor = 0;
  std::uint32_t component = 0;
};

/// An oriented link diagram on the 2-sphere.
///
/// Arc components are numbered 0..arc_component_count-1 in order of their
/// smallest arc index; crossing-free circles (free loops) follow as
/// components arc_component_count..component_count()-1.
struct LinkDiagram {
  std::vector<Crossing> crossings;
  std::vector<Arc> arcs;
  std::uint32_t free_loops = 0;
  std::uint32_t arc_component_count = 0;

  std::uint32_t crossing_count() const {
    return static_cast<std::uint32_t>(crossings.size());
  }
  std::uint32_t arc_count() const {
    return static_cast<std::uint32_t>(arcs.size());
  }
  std::uint32_t component_count() const {
    return arc_component_count + free_loops;
  }
};

/// Builds the oriented diagram described by a PD code.
///
/// Orientation is propagated from the under-strand convention (slot 0 in,
/// slot 2 out). Components that never pass under anything keep the ambient
/// freedom of direction; those are oriented so arc labels ascend. After
/// propagation the per-component consecutive-label rule is enforced and the
/// code is rejected if the implied embedding is not spherical.
LinkDiagram pd_to_diagram(const PDCode& pd);

/// Closes a braid word. Crossing count equals the word length, component
/// count equals the cycle count of the induced permutation, and strands that
/// appear in no letter close into free loops.
LinkDiagram braid_closure(const BraidWord& braid);

/// Realizes a signed Gauss code as a spherical diagram. The signs force the
/// counterclockwise slot order at every crossing, so the code is accepted
/// exactly when the forced embedding has genus zero; anything else is
/// rejected as non-realizable (a virtual-knot code).
LinkDiagram gauss_to_diagram(const GaussCode& code);

/// +1 or -1 under the quarter-turn rule described at Crossing.
inline int crossing_sign(const LinkDiagram& d, std::uint32_t crossing) {
  return d.crossings[crossing].incoming[1] ? +1 : -1;
}

/// Component of the strand passing under / over at a crossing.
std::uint32_t under_component(const LinkDiagram& d, std::uint32_t crossing);
std::uint32_t over_component(const LinkDiagram& d, std::uint32_t crossing);

/// Returns the diagram with the selected components reversed. flip must have
/// component_count() entries; flipping a free loop is a no-op. Arc indices
/// and component numbering are preserved.
LinkDiagram reverse_components(const LinkDiagram& d,
                               const std::vector<bool>& flip);

/// Serializes back to a PD code: arcs are relabeled 1.. consecutively along
/// each component starting from the component's smallest arc index, and
/// crossings keep their stored order. Feeding the result to pd_to_diagram
/// reproduces the diagram; serialization is stable under that round trip.
PDCode to_pd(const LinkDiagram& d);

/// Text form of a PD code in the parse_pd grammar.
std::string to_pd_text(const PDCode& pd);

}  // namespace knotcert
