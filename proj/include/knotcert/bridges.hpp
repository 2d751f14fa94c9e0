#pragma once

#include <cstdint>
#include <vector>

#include "knotcert/link_diagram.hpp"

namespace knotcert {

/// A maximal run of same-type passages along one component: the crossings it
/// traverses (all over, or all under) in order, and the arcs carrying it. The
/// arc list starts with the arc entering the first crossing of the run and
/// ends with the arc leaving the last one, so neighbouring runs share their
/// boundary arc.
struct Bridge {
  std::uint32_t component = 0;
  std::vector<std::uint32_t> crossings;
  std::vector<std::uint32_t> arcs;
};

/// Bridge decomposition of a fixed diagram: cut every component where it
/// switches between passing over and passing under. Any valid bridge
/// presentation of the diagram refines these maximal runs, so their count is
/// the minimal bridge count of the diagram.
///
/// A component whose passages are all of one type is carried by a single
/// closed run; it is presented as that run (first arc repeated at the end)
/// plus one empty bridge of the other type sitting on its smallest arc, so
/// over and under bridge counts still match. Crossing-free components get no
/// bridges and are reported in crossing_free_components.
struct BridgePresentation {
  std::vector<Bridge> over_bridges;
  std::vector<Bridge> under_bridges;
  std::uint32_t bridge_count = 0;  // number of over bridges
  std::vector<std::uint32_t> crossing_free_components;
};

BridgePresentation bridge_decomposition(const LinkDiagram& d);

/// Number of over bridges (equals the number of under bridges).
std::uint32_t bridge_number(const LinkDiagram& d);

}  // namespace knotcert
