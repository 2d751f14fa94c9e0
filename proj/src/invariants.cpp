#include "knotcert/invariants.hpp"

#include <stdexcept>

#include "dsu.hpp"
#include "knotcert/plane_graph.hpp"

namespace knotcert {

long long writhe(const LinkDiagram& d) {
  long long w = 0;
  for (std::uint32_t i = 0; i < d.crossing_count(); ++i)
    w += crossing_sign(d, i);
  return w;
}

PositivityVerdict is_positive(const LinkDiagram& d) {
  PositivityVerdict v;
  const std::uint32_t c = d.crossing_count();

  // self-crossing signs are invariant under reorientation
  for (std::uint32_t i = 0; i < c; ++i) {
    if (under_component(d, i) == over_component(d, i) &&
        crossing_sign(d, i) < 0) {
      v.positive = false;
      v.obstruction_crossing = i;
      return v;
    }
  }

  struct X {
    std::uint32_t u, o;
    int sign;
  };
  std::vector<X> xs(c);
  for (std::uint32_t i = 0; i < c; ++i)
    xs[i] = {under_component(d, i), over_component(d, i), crossing_sign(d, i)};

  const std::uint32_t k = d.arc_component_count;
  const std::uint32_t free_bits = k > 0 ? k - 1 : 0;
  if (free_bits > 24)
    throw std::invalid_argument(
        "too many components for the exhaustive orientation search");
  std::vector<bool> flip(k, false);
  for (std::uint64_t mask = 0; mask < (1ull << free_bits); ++mask) {
    for (std::uint32_t j = 1; j < k; ++j)
      flip[j] = (mask >> (j - 1)) & 1;
    bool ok = true;
    for (const X& x : xs) {
      const int sign = (flip[x.u] != flip[x.o]) ? -x.sign : x.sign;
      if (sign < 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      v.positive = true;
      std::vector<bool> witness(d.component_count(), false);
      for (std::uint32_t j = 0; j < k; ++j) witness[j] = flip[j];
      v.witness_orientation = std::move(witness);
      return v;
    }
  }

  // every orientation fails; mask 0 failed, so the input orientation has a
  // negative crossing to point at
  v.positive = false;
  for (std::uint32_t i = 0; i < c; ++i) {
    if (crossing_sign(d, i) < 0) {
      v.obstruction_crossing = i;
      break;
    }
  }
  return v;
}

LinkingMatrix linking_matrix(const LinkDiagram& d) {
  LinkingMatrix m;
  m.components = d.component_count();
  m.entries.assign(static_cast<std::size_t>(m.components) * m.components, 0);
  for (std::uint32_t i = 0; i < d.crossing_count(); ++i) {
    const std::uint32_t u = under_component(d, i);
    const std::uint32_t o = over_component(d, i);
    m.at(u, o) += crossing_sign(d, i);
  }
  for (std::uint32_t i = 0; i < m.components; ++i) {
    for (std::uint32_t j = i + 1; j < m.components; ++j) {
      const long long lk = (m.at(i, j) + m.at(j, i)) / 2;
      m.at(i, j) = lk;
      m.at(j, i) = lk;
    }
  }
  return m;
}

bool linking_graph_connected(const LinkingMatrix& m) {
  if (m.components <= 1) return true;
  Dsu dsu(m.components);
  for (std::uint32_t i = 0; i < m.components; ++i)
    for (std::uint32_t j = i + 1; j < m.components; ++j)
      if (m.at(i, j) != 0) dsu.unite(i, j);
  const std::uint32_t r = dsu.find(0);
  for (std::uint32_t i = 1; i < m.components; ++i)
    if (dsu.find(i) != r) return false;
  return true;
}

std::uint32_t seifert_circles(const LinkDiagram& d) {
  const std::uint32_t n = d.arc_count();
  // orientation-respecting smoothing: under-in continues to over-out,
  // over-in continues to under-out
  std::vector<std::uint32_t> next(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    const ArcEnd h = d.arcs[a].head;
    const Crossing& x = d.crossings[h.crossing];
    if (h.slot == 0)
      next[a] = x.arc[x.incoming[1] ? 3 : 1];
    else
      next[a] = x.arc[2];
  }
  std::vector<char> seen(n, 0);
  std::uint32_t circles = d.free_loops;
  for (std::uint32_t a = 0; a < n; ++a) {
    if (seen[a]) continue;
    ++circles;
    std::uint32_t at = a;
    do {
      seen[at] = 1;
      at = next[at];
    } while (at != a);
  }
  return circles;
}

int canonical_euler_characteristic(const LinkDiagram& d) {
  if (!diagram_connected(d))
    throw std::invalid_argument(
        "euler characteristic needs a connected diagram");
  return static_cast<int>(seifert_circles(d)) -
         static_cast<int>(d.crossing_count());
}

}  // namespace knotcert
