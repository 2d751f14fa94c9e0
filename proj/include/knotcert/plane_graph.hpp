#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "knotcert/link_diagram.hpp"

namespace knotcert {

/// The underlying 4-valent graph of a diagram on the sphere: vertices are
/// crossings, edges are arcs, and the rotation system is the counterclockwise
/// slot order carried by the arc ends. Free loops have no vertices and are
/// not represented here.
struct PlaneGraph {
  struct Edge {
    ArcEnd tail;
    ArcEnd head;
  };
  std::uint32_t vertex_count = 0;
  std::vector<Edge> edges;
};

PlaneGraph build_plane_graph(const LinkDiagram& d);

/// One side of an arc. left = true is the side seen on the left when walking
/// the arc from tail to head.
struct ArcSide {
  std::uint32_t arc = 0;
  bool left = true;
};

/// Faces of the embedding, one boundary walk per face. Every arc side lies in
/// exactly one walk, exactly once. face_of[arc] holds {left face, right face}.
struct FaceSet {
  std::vector<std::vector<ArcSide>> faces;
  std::vector<std::array<std::uint32_t, 2>> face_of;

  std::uint32_t face_of_side(ArcSide s) const {
    return face_of[s.arc][s.left ? 0 : 1];
  }
  std::uint32_t face_count() const {
    return static_cast<std::uint32_t>(faces.size());
  }
};

/// Traces all face boundary walks of the rotation system. Walks are listed in
/// order of their smallest directed arc, so the result is deterministic. On a
/// diagram with several connected pieces each piece is traced as if alone on
/// its own sphere, so Euler's formula V - E + F = 2 holds piecewise.
FaceSet trace_faces(const PlaneGraph& g);

/// True when the whole diagram is one connected object on the sphere: either
/// a single free loop with no crossings, or free of loops with all crossings
/// in one graph component.
bool diagram_connected(const LinkDiagram& d);

/// Graph-component id per crossing (components of the 4-valent graph, not
/// link components), numbered by smallest crossing index.
std::vector<std::uint32_t> crossing_partition(const LinkDiagram& d);

std::uint32_t crossing_component_count(const LinkDiagram& d);

}  // namespace knotcert
