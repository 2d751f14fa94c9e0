#include "knotcert/link_diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dsu.hpp"
#include "knotcert/plane_graph.hpp"

namespace knotcert {
namespace {

enum class Dir : std::uint8_t { Unknown, In, Out };

Dir opposite(Dir d) { return d == Dir::In ? Dir::Out : Dir::In; }

struct RawCrossing {
  std::array<std::uint32_t, 4> arc{};
  std::array<bool, 4> incoming{};
};

// Shared tail of every constructor: derive arc endpoints, successors and
// component orbits from slot-level incidence. Arc ids must be dense.
LinkDiagram assemble(const std::vector<RawCrossing>& raw,
                     std::uint32_t free_loops) {
  const std::uint32_t c = static_cast<std::uint32_t>(raw.size());
  std::uint32_t n_arcs = 0;
  for (const auto& x : raw)
    for (std::uint32_t a : x.arc) n_arcs = std::max(n_arcs, a + 1);

  struct Ends {
    ArcEnd tail, head;
    int heads = 0, tails = 0;
  };
  std::vector<Ends> ends(n_arcs);
  for (std::uint32_t i = 0; i < c; ++i) {
    const auto& x = raw[i];
    if (!x.incoming[0] || x.incoming[2] || x.incoming[1] == x.incoming[3])
      throw ValidationError(
          "crossing slots violate the under-strand convention");
    for (std::uint8_t s = 0; s < 4; ++s) {
      const ArcEnd e{i, s};
      Ends& a = ends[x.arc[s]];
      if (x.incoming[s]) {
        a.head = e;
        ++a.heads;
      } else {
        a.tail = e;
        ++a.tails;
      }
    }
  }
  for (std::uint32_t a = 0; a < n_arcs; ++a) {
    if (ends[a].heads != 1 || ends[a].tails != 1)
      throw ValidationError("arc incidence is not a disjoint union of circles");
  }

  LinkDiagram d;
  d.free_loops = free_loops;
  d.crossings.resize(c);
  for (std::uint32_t i = 0; i < c; ++i)
    d.crossings[i] = Crossing{raw[i].arc, raw[i].incoming};
  d.arcs.resize(n_arcs);
  for (std::uint32_t a = 0; a < n_arcs; ++a) {
    Arc& arc = d.arcs[a];
    arc.tail = ends[a].tail;
    arc.head = ends[a].head;
    arc.successor =
        d.crossings[arc.head.crossing].arc[(arc.head.slot + 2) % 4];
  }
  constexpr std::uint32_t kNone = 0xFFFFFFFFu;
  for (auto& arc : d.arcs) arc.component = kNone;
  std::uint32_t comp = 0;
  for (std::uint32_t a = 0; a < n_arcs; ++a) {
    if (d.arcs[a].component != kNone) continue;
    std::uint32_t at = a;
    do {
      d.arcs[at].component = comp;
      at = d.arcs[at].successor;
    } while (at != a);
    ++comp;
  }
  d.arc_component_count = comp;
  return d;
}

// Euler's formula, one sphere per connected piece of the 4-valent graph.
void check_spherical(const LinkDiagram& d, const char* what) {
  if (d.crossing_count() == 0) return;
  const FaceSet faces = trace_faces(build_plane_graph(d));
  const std::vector<std::uint32_t> piece = crossing_partition(d);
  const std::uint32_t pieces =
      1 + *std::max_element(piece.begin(), piece.end());
  std::vector<long long> v(pieces, 0), e(pieces, 0), f(pieces, 0);
  for (std::uint32_t i = 0; i < d.crossing_count(); ++i) ++v[piece[i]];
  for (const auto& arc : d.arcs) ++e[piece[arc.tail.crossing]];
  for (const auto& walk : faces.faces)
    ++f[piece[d.arcs[walk.front().arc].tail.crossing]];
  for (std::uint32_t p = 0; p < pieces; ++p) {
    if (v[p] - e[p] + f[p] != 2) throw ValidationError(what);
  }
}

}  // namespace

LinkDiagram pd_to_diagram(const PDCode& pd) {
  if (pd.crossings.empty()) {
    if (pd.free_loops == 0)
      throw ValidationError("empty diagram: no crossings and no free loops");
    LinkDiagram d;
    d.free_loops = pd.free_loops;
    return d;
  }

  std::map<std::int64_t, int> census;
  for (const auto& x : pd.crossings)
    for (std::int64_t label : x) ++census[label];
  std::vector<std::int64_t> labels;
  labels.reserve(census.size());
  std::map<std::int64_t, std::uint32_t> rank;
  for (const auto& [label, count] : census) {
    if (count != 2)
      throw ValidationError("arc label " + std::to_string(label) + " occurs " +
                            std::to_string(count) +
                            " time(s), expected exactly 2");
    rank[label] = static_cast<std::uint32_t>(labels.size());
    labels.push_back(label);
  }

  const std::uint32_t c = static_cast<std::uint32_t>(pd.crossings.size());
  const std::uint32_t n_arcs = static_cast<std::uint32_t>(labels.size());
  std::vector<std::array<std::uint32_t, 4>> slot(c);
  for (std::uint32_t i = 0; i < c; ++i)
    for (std::uint8_t s = 0; s < 4; ++s)
      slot[i][s] = rank[pd.crossings[i][s]];

  std::vector<std::array<ArcEnd, 2>> occ(n_arcs);
  std::vector<int> occ_n(n_arcs, 0);
  for (std::uint32_t i = 0; i < c; ++i)
    for (std::uint8_t s = 0; s < 4; ++s) occ[slot[i][s]][occ_n[slot[i][s]]++] = {i, s};

  // Directions per slot occurrence. Slots 0/2 are anchored by the tuple
  // convention; each arc runs one way; the over strand enters exactly one of
  // slots 1/3. Propagate to a fixpoint.
  std::vector<std::array<Dir, 4>> dir(
      c, {Dir::Unknown, Dir::Unknown, Dir::Unknown, Dir::Unknown});
  std::vector<std::pair<std::uint32_t, std::uint8_t>> work;
  auto set = [&](std::uint32_t cc, std::uint8_t ss, Dir dd) {
    Dir& at = dir[cc][ss];
    if (at == dd) return;
    if (at != Dir::Unknown)
      throw ValidationError("orientation conflict on arc " +
                            std::to_string(labels[slot[cc][ss]]));
    at = dd;
    work.emplace_back(cc, ss);
  };
  auto drain = [&]() {
    while (!work.empty()) {
      const auto [cc, ss] = work.back();
      work.pop_back();
      const Dir dd = dir[cc][ss];
      const std::uint32_t a = slot[cc][ss];
      const bool first =
          occ[a][0].crossing == cc && occ[a][0].slot == ss;
      const ArcEnd other = occ[a][first ? 1 : 0];
      set(other.crossing, other.slot, opposite(dd));
      if (ss == 1 || ss == 3) set(cc, ss ^ 2, opposite(dd));
    }
  };
  for (std::uint32_t i = 0; i < c; ++i) {
    set(i, 0, Dir::In);
    set(i, 2, Dir::Out);
    drain();
  }

  // Components that never pass under anything are untouched by propagation
  // and keep the ambient freedom of direction. Direct each arbitrarily here;
  // the ascending-label rule below settles the final choice.
  std::vector<bool> free_arc(n_arcs, false);
  for (std::uint32_t a = 0; a < n_arcs; ++a)
    free_arc[a] = dir[occ[a][0].crossing][occ[a][0].slot] == Dir::Unknown;
  for (std::uint32_t a = 0; a < n_arcs; ++a) {
    if (dir[occ[a][0].crossing][occ[a][0].slot] != Dir::Unknown) continue;
    set(occ[a][0].crossing, occ[a][0].slot, Dir::Out);
    drain();
  }

  auto build_raw = [&]() {
    std::vector<RawCrossing> raw(c);
    for (std::uint32_t i = 0; i < c; ++i) {
      raw[i].arc = slot[i];
      for (std::uint8_t s = 0; s < 4; ++s)
        raw[i].incoming[s] = dir[i][s] == Dir::In;
    }
    return raw;
  };
  LinkDiagram d = assemble(build_raw(), pd.free_loops);

  // Published codes number arcs consecutively along each component; walking
  // a component from its smallest arc must step labels by one.
  auto failing = [&](const LinkDiagram& dd) {
    std::vector<std::uint32_t> bad;
    std::vector<char> seen(dd.arc_component_count, 0);
    for (std::uint32_t a = 0; a < n_arcs; ++a) {
      const std::uint32_t k = dd.arcs[a].component;
      if (seen[k]) continue;
      seen[k] = 1;
      std::uint32_t at = a;
      std::int64_t want = labels[a];
      bool ok = true;
      do {
        if (labels[at] != want) {
          ok = false;
          break;
        }
        ++want;
        at = dd.arcs[at].successor;
      } while (at != a);
      if (!ok) bad.push_back(k);
    }
    return bad;
  };
  const auto bad = failing(d);
  if (!bad.empty()) {
    bool flipped = false;
    for (const std::uint32_t k : bad) {
      std::uint32_t a0 = 0;
      while (d.arcs[a0].component != k) ++a0;
      if (!free_arc[a0]) continue;  // direction was forced; nothing to retry
      for (std::uint32_t a = 0; a < n_arcs; ++a) {
        if (d.arcs[a].component != k) continue;
        for (const ArcEnd& e : occ[a])
          dir[e.crossing][e.slot] = opposite(dir[e.crossing][e.slot]);
      }
      flipped = true;
    }
    if (flipped) d = assemble(build_raw(), pd.free_loops);
    if (!failing(d).empty())
      throw ValidationError(
          "arc labels must increase consecutively along each component");
  }

  check_spherical(d, "crossing code does not describe a diagram on the sphere");
  return d;
}

LinkDiagram braid_closure(const BraidWord& braid) {
  const std::uint32_t n = braid.strand_count;
  if (n == 0) throw ValidationError("strand count must be at least 1");
  for (const std::int32_t w : braid.letters) {
    const std::int64_t g = w < 0 ? -static_cast<std::int64_t>(w) : w;
    if (w == 0 || g >= n)
      throw ValidationError("generator " + std::to_string(g) +
                            " out of range for strand count " +
                            std::to_string(n));
  }

  // Strand flows downward; letter +/-i crosses positions i, i+1. The tuple
  // is read counterclockwise from the incoming under arc.
  std::vector<std::uint32_t> cur(n);
  std::iota(cur.begin(), cur.end(), 0u);
  std::uint32_t next = n;
  struct Step {
    std::uint32_t a, b, c, d;
    bool positive;
  };
  std::vector<Step> steps;
  steps.reserve(braid.letters.size());
  for (const std::int32_t w : braid.letters) {
    const std::uint32_t i = static_cast<std::uint32_t>((w < 0 ? -w : w) - 1);
    const Step st{cur[i], cur[i + 1], next, next + 1, w > 0};
    next += 2;
    cur[i] = st.c;
    cur[i + 1] = st.d;
    steps.push_back(st);
  }

  // Close up: the arc leaving the bottom of position i is the arc entering
  // the top. Merged classes appearing at no crossing are free loops.
  Dsu dsu(next);
  for (std::uint32_t i = 0; i < n; ++i) dsu.unite(cur[i], i);
  std::vector<char> used(next, 0);
  for (const Step& st : steps)
    for (const std::uint32_t x : {st.a, st.b, st.c, st.d}) used[dsu.find(x)] = 1;
  std::vector<std::uint32_t> id(next, 0);
  std::uint32_t dense = 0, loops = 0;
  for (std::uint32_t r = 0; r < next; ++r) {
    if (dsu.find(r) != r) continue;
    if (used[r])
      id[r] = dense++;
    else
      ++loops;
  }

  std::vector<RawCrossing> raw;
  raw.reserve(steps.size());
  for (const Step& st : steps) {
    const std::uint32_t a = id[dsu.find(st.a)];
    const std::uint32_t b = id[dsu.find(st.b)];
    const std::uint32_t c = id[dsu.find(st.c)];
    const std::uint32_t d = id[dsu.find(st.d)];
    if (st.positive)
      raw.push_back({{b, a, c, d}, {true, true, false, false}});
    else
      raw.push_back({{a, c, d, b}, {true, false, false, true}});
  }
  LinkDiagram out = assemble(raw, loops);
  check_spherical(out, "closure is not a diagram on the sphere");
  return out;
}

LinkDiagram gauss_to_diagram(const GaussCode& code) {
  struct Site {
    std::uint32_t comp = 0;
    std::uint32_t idx = 0;
  };
  struct Entry {
    int sign = 0;
    bool sign_conflict = false;
    Site over, under;
    int overs = 0, unders = 0;
  };
  std::map<std::int64_t, Entry> entries;
  std::vector<std::uint32_t> base(code.components.size(), 0);
  std::uint32_t n_arcs = 0, loops = 0;
  for (std::uint32_t k = 0; k < code.components.size(); ++k) {
    const auto& comp = code.components[k];
    base[k] = n_arcs;
    if (comp.empty()) {
      ++loops;
      continue;
    }
    n_arcs += static_cast<std::uint32_t>(comp.size());
    for (std::uint32_t j = 0; j < comp.size(); ++j) {
      const GaussPassage& p = comp[j];
      Entry& e = entries[p.label];
      if (e.sign == 0)
        e.sign = p.sign;
      else if (e.sign != p.sign)
        e.sign_conflict = true;
      if (p.over) {
        e.over = {k, j};
        ++e.overs;
      } else {
        e.under = {k, j};
        ++e.unders;
      }
    }
  }
  for (const auto& [label, e] : entries) {
    if (e.overs + e.unders != 2)
      throw ValidationError("crossing " + std::to_string(label) + " occurs " +
                            std::to_string(e.overs + e.unders) +
                            " time(s), expected exactly 2");
    if (e.overs != 1)
      throw ValidationError("crossing " + std::to_string(label) +
                            " must appear once over and once under");
    if (e.sign_conflict)
      throw ValidationError("crossing " + std::to_string(label) +
                            " has conflicting signs");
  }

  if (entries.empty()) {
    LinkDiagram d;
    d.free_loops = loops;
    return d;
  }

  // The sign pins the counterclockwise slot order, so the whole rotation
  // system is forced; Euler then decides realizability.
  std::vector<RawCrossing> raw;
  raw.reserve(entries.size());
  auto arc_into = [&](Site s) {
    const auto m = code.components[s.comp].size();
    return base[s.comp] +
           static_cast<std::uint32_t>((s.idx + m - 1) % m);
  };
  auto arc_from = [&](Site s) {
    return base[s.comp] + s.idx;
  };
  for (const auto& [label, e] : entries) {
    const std::uint32_t ui = arc_into(e.under), uo = arc_from(e.under);
    const std::uint32_t oi = arc_into(e.over), oo = arc_from(e.over);
    if (e.sign > 0)
      raw.push_back({{ui, oi, uo, oo}, {true, true, false, false}});
    else
      raw.push_back({{ui, oo, uo, oi}, {true, false, false, true}});
  }
  LinkDiagram d = assemble(raw, loops);
  check_spherical(d, "signed code is not realizable on the sphere");
  return d;
}

std::uint32_t under_component(const LinkDiagram& d, std::uint32_t crossing) {
  return d.arcs[d.crossings[crossing].arc[0]].component;
}

std::uint32_t over_component(const LinkDiagram& d, std::uint32_t crossing) {
  return d.arcs[d.crossings[crossing].arc[1]].component;
}

LinkDiagram reverse_components(const LinkDiagram& d,
                               const std::vector<bool>& flip) {
  if (flip.size() != d.component_count())
    throw std::invalid_argument(
        "orientation flip vector must have one entry per component");
  std::vector<RawCrossing> raw(d.crossing_count());
  for (std::uint32_t i = 0; i < d.crossing_count(); ++i) {
    RawCrossing x{d.crossings[i].arc, d.crossings[i].incoming};
    for (std::uint8_t s = 0; s < 4; ++s)
      if (flip[d.arcs[x.arc[s]].component]) x.incoming[s] = !x.incoming[s];
    if (!x.incoming[0]) {
      // the under strand now runs the other way; rotating the tuple by two
      // slots restores slot 0 = under-in without touching the cyclic order
      x = RawCrossing{{x.arc[2], x.arc[3], x.arc[0], x.arc[1]},
                      {x.incoming[2], x.incoming[3], x.incoming[0],
                       x.incoming[1]}};
    }
    raw[i] = x;
  }
  return assemble(raw, d.free_loops);
}

PDCode to_pd(const LinkDiagram& d) {
  std::vector<std::int64_t> label(d.arc_count(), 0);
  std::vector<char> seen(d.arc_component_count, 0);
  std::int64_t next = 1;
  for (std::uint32_t a = 0; a < d.arc_count(); ++a) {
    if (seen[d.arcs[a].component]) continue;
    seen[d.arcs[a].component] = 1;
    std::uint32_t at = a;
    do {
      label[at] = next++;
      at = d.arcs[at].successor;
    } while (at != a);
  }
  PDCode pd;
  pd.free_loops = d.free_loops;
  pd.crossings.reserve(d.crossing_count());
  for (const auto& x : d.crossings) {
    pd.crossings.push_back({label[x.arc[0]], label[x.arc[1]],
                            label[x.arc[2]], label[x.arc[3]]});
  }
  return pd;
}

std::string to_pd_text(const PDCode& pd) {
  std::string out;
  if (pd.free_loops > 0) out += "FREE_LOOPS=" + std::to_string(pd.free_loops);
  for (const auto& x : pd.crossings) {
    if (!out.empty()) out += ' ';
    out += "X(" + std::to_string(x[0]) + ',' + std::to_string(x[1]) + ',' +
           std::to_string(x[2]) + ',' + std::to_string(x[3]) + ')';
  }
  return out;
}

}  // namespace knotcert
