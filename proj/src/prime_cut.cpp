#include "knotcert/prime_cut.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>

#include "dsu.hpp"
#include "knotcert/plane_graph.hpp"

namespace knotcert {
namespace {

// Crossings reachable from each other when two arcs are deleted. A curve
// through two arcs bordering the same pair of faces separates the sphere;
// its two sides hold exactly the two crossing classes left after deletion.
struct SplitResult {
  bool split = false;
  std::uint32_t with_zero = 0;  // crossings on the side containing crossing 0
  std::uint32_t other = 0;
};

SplitResult try_split(const LinkDiagram& d, std::uint32_t e1,
                      std::uint32_t e2) {
  const std::uint32_t c = d.crossing_count();
  Dsu dsu(c);
  for (std::uint32_t a = 0; a < d.arc_count(); ++a) {
    if (a == e1 || a == e2) continue;
    dsu.unite(d.arcs[a].tail.crossing, d.arcs[a].head.crossing);
  }
  const std::uint32_t r0 = dsu.find(0);
  std::uint32_t with_zero = 0, other = 0, classes = 1;
  std::uint32_t r1 = r0;
  for (std::uint32_t i = 0; i < c; ++i) {
    const std::uint32_t r = dsu.find(i);
    if (r == r0) {
      ++with_zero;
    } else {
      if (r1 == r0) {
        r1 = r;
        ++classes;
      } else if (r != r1) {
        ++classes;
      }
      ++other;
    }
  }
  // removing two edges from a connected graph leaves at most two pieces
  if (classes != 2) return {};
  return {true, with_zero, other};
}

}  // namespace

PrimeCutResult search_prime_cut(const LinkDiagram& d) {
  if (d.crossing_count() == 0 || !diagram_connected(d))
    throw std::invalid_argument(
        "prime cut search needs a connected diagram with at least one "
        "crossing");

  PrimeCutResult out;
  out.record.searched = true;

  const FaceSet faces = trace_faces(build_plane_graph(d));
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>
      groups;
  for (std::uint32_t a = 0; a < d.arc_count(); ++a) {
    const auto f = faces.face_of[a];
    const auto key = std::minmax(f[0], f[1]);
    if (f[0] == f[1]) {
      // A curve crossing one arc twice encloses a crossing-free piece of
      // that arc and nothing else in a connected diagram: never a witness,
      // but part of the exhaustive search record.
      ++out.record.single_candidates;
    }
    groups[{key.first, key.second}].push_back(a);
  }

  std::optional<CutWitness> best;
  auto better = [](const CutWitness& cand, const CutWitness& cur) {
    const auto bal = [](const CutWitness& w) {
      const long long a = w.side_crossings[0], b = w.side_crossings[1];
      return std::llabs(a - b);
    };
    if (bal(cand) != bal(cur)) return bal(cand) < bal(cur);
    return cand.arcs < cur.arcs;
  };
  for (const auto& [key, arcs] : groups) {
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      for (std::size_t j = i + 1; j < arcs.size(); ++j) {
        ++out.record.pair_candidates;
        const SplitResult s = try_split(d, arcs[i], arcs[j]);
        if (!s.split) continue;
        CutWitness w;
        w.kind = CutWitness::Kind::EdgePair;
        w.arcs = {arcs[i], arcs[j]};
        w.side_crossings = {s.with_zero, s.other};
        if (!best || better(w, *best)) best = w;
      }
    }
  }
  out.witness = best;
  return out;
}

std::optional<CutWitness> find_prime_cut(const LinkDiagram& d) {
  return search_prime_cut(d).witness;
}

bool is_prime_diagram(const LinkDiagram& d) {
  if (d.crossing_count() == 0 || !diagram_connected(d)) return false;
  return !search_prime_cut(d).witness.has_value();
}

}  // namespace knotcert
