#include "knotcert/bridges.hpp"

namespace knotcert {

BridgePresentation bridge_decomposition(const LinkDiagram& d) {
  BridgePresentation out;
  const std::uint32_t n = d.arc_count();
  std::vector<char> started(d.arc_component_count, 0);
  for (std::uint32_t a0 = 0; a0 < n; ++a0) {
    const std::uint32_t comp = d.arcs[a0].component;
    if (started[comp]) continue;
    started[comp] = 1;

    // walk the component once; every arc head is a passage
    std::vector<std::uint32_t> arcs;      // arcs in walk order
    std::vector<std::uint32_t> crossing;  // crossing of passage j
    std::vector<char> over;               // passage type
    std::uint32_t at = a0;
    do {
      const ArcEnd h = d.arcs[at].head;
      arcs.push_back(at);
      crossing.push_back(h.crossing);
      over.push_back(h.slot == 1 || h.slot == 3);
      at = d.arcs[at].successor;
    } while (at != a0);
    const std::uint32_t m = static_cast<std::uint32_t>(arcs.size());

    bool uniform = true;
    for (std::uint32_t j = 1; j < m; ++j)
      if (over[j] != over[0]) uniform = false;
    if (uniform) {
      // single closed run; the matching bridge of the other type is empty
      // and sits on the component's smallest arc
      Bridge run;
      run.component = comp;
      run.crossings.assign(crossing.begin(), crossing.end());
      run.arcs.assign(arcs.begin(), arcs.end());
      run.arcs.push_back(a0);
      Bridge empty;
      empty.component = comp;
      empty.arcs = {a0};
      if (over[0]) {
        out.over_bridges.push_back(std::move(run));
        out.under_bridges.push_back(std::move(empty));
      } else {
        out.under_bridges.push_back(std::move(run));
        out.over_bridges.push_back(std::move(empty));
      }
      continue;
    }

    // rotate to the first run boundary after the smallest arc's passage
    std::uint32_t start = 0;
    while (over[start] == over[(start + m - 1) % m]) ++start;
    std::uint32_t j = start, left = m;
    while (left > 0) {
      Bridge b;
      b.component = comp;
      const char type = over[j];
      b.arcs.push_back(arcs[j]);
      while (left > 0 && over[j] == type) {
        b.crossings.push_back(crossing[j]);
        j = (j + 1) % m;
        b.arcs.push_back(arcs[j]);
        --left;
      }
      if (type)
        out.over_bridges.push_back(std::move(b));
      else
        out.under_bridges.push_back(std::move(b));
    }
  }

  out.bridge_count = static_cast<std::uint32_t>(out.over_bridges.size());
  for (std::uint32_t k = d.arc_component_count; k < d.component_count(); ++k)
    out.crossing_free_components.push_back(k);
  return out;
}

std::uint32_t bridge_number(const LinkDiagram& d) {
  return bridge_decomposition(d).bridge_count;
}

}  // namespace knotcert
