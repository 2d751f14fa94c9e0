#include "knotcert/plane_graph.hpp"

#include <algorithm>

#include "dsu.hpp"

namespace knotcert {

PlaneGraph build_plane_graph(const LinkDiagram& d) {
  PlaneGraph g;
  g.vertex_count = d.crossing_count();
  g.edges.reserve(d.arc_count());
  for (const auto& arc : d.arcs) g.edges.push_back({arc.tail, arc.head});
  return g;
}

FaceSet trace_faces(const PlaneGraph& g) {
  const std::uint32_t e = static_cast<std::uint32_t>(g.edges.size());
  FaceSet out;
  out.face_of.assign(e, {0, 0});

  // occupant of each slot, with the direction it leaves the vertex in
  struct SlotRef {
    std::uint32_t arc = 0;
    bool leaves_forward = false;  // true when this end is the edge's tail
  };
  std::vector<std::array<SlotRef, 4>> at(g.vertex_count);
  for (std::uint32_t a = 0; a < e; ++a) {
    const auto& ed = g.edges[a];
    at[ed.tail.crossing][ed.tail.slot] = {a, true};
    at[ed.head.crossing][ed.head.slot] = {a, false};
  }

  // Directed edge 2a runs tail->head (the arc's left side), 2a+1 runs back.
  // Arriving at a vertex, the boundary of the face on the left continues
  // along the next slot clockwise, i.e. slot - 1.
  constexpr std::uint32_t kNone = 0xFFFFFFFFu;
  std::vector<std::uint32_t> face(2ull * e, kNone);
  for (std::uint32_t start = 0; start < 2 * e; ++start) {
    if (face[start] != kNone) continue;
    const std::uint32_t f = out.face_count();
    out.faces.emplace_back();
    std::uint32_t de = start;
    do {
      face[de] = f;
      out.faces.back().push_back({de / 2, (de % 2) == 0});
      const auto& ed = g.edges[de / 2];
      const ArcEnd arrive = (de % 2) == 0 ? ed.head : ed.tail;
      const std::uint8_t s = static_cast<std::uint8_t>((arrive.slot + 3) % 4);
      const SlotRef next = at[arrive.crossing][s];
      de = 2 * next.arc + (next.leaves_forward ? 0 : 1);
    } while (de != start);
  }
  for (std::uint32_t a = 0; a < e; ++a)
    out.face_of[a] = {face[2 * a], face[2 * a + 1]};
  return out;
}

std::vector<std::uint32_t> crossing_partition(const LinkDiagram& d) {
  const std::uint32_t c = d.crossing_count();
  Dsu dsu(c);
  for (const auto& arc : d.arcs) dsu.unite(arc.tail.crossing, arc.head.crossing);
  constexpr std::uint32_t kNone = 0xFFFFFFFFu;
  std::vector<std::uint32_t> id(c, kNone);
  std::vector<std::uint32_t> piece(c, 0);
  std::uint32_t next = 0;
  for (std::uint32_t i = 0; i < c; ++i) {
    const std::uint32_t r = dsu.find(i);
    if (id[r] == kNone) id[r] = next++;
    piece[i] = id[r];
  }
  return piece;
}

std::uint32_t crossing_component_count(const LinkDiagram& d) {
  const auto piece = crossing_partition(d);
  return piece.empty() ? 0 : 1 + *std::max_element(piece.begin(), piece.end());
}

bool diagram_connected(const LinkDiagram& d) {
  if (d.crossing_count() == 0) return d.free_loops == 1;
  return d.free_loops == 0 && crossing_component_count(d) == 1;
}

}  // namespace knotcert
