#include "knotcert/report.hpp"

#include <atomic>
#include <istream>
#include <iterator>
#include <sstream>
#include <thread>
#include <utility>

#include "knotcert/bridges.hpp"

namespace knotcert {
namespace {

std::string trim(const std::string& s) {
  const std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

InputFormat sniff(const std::string& text) {
  const std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i == std::string::npos) return InputFormat::Pd;
  const char ch = text[i];
  if (ch == '{') return InputFormat::Json;
  if (text.compare(i, 2, "BR") == 0) return InputFormat::Braid;
  if (ch == 'O' || ch == 'U') return InputFormat::Gauss;
  return InputFormat::Pd;
}

LinkDiagram diagram_from_json(const nlohmann::json& j) {
  if (!j.is_object())
    throw ParseError("json record must be an object", 0);
  const int tagged = static_cast<int>(j.contains("pd")) +
                     static_cast<int>(j.contains("braid")) +
                     static_cast<int>(j.contains("gauss"));
  if (tagged != 1)
    throw ParseError("json record needs exactly one of 'pd', 'braid', 'gauss'",
                     0);

  if (j.contains("pd")) {
    const auto& arr = j.at("pd");
    if (!arr.is_array())
      throw ParseError("'pd' must be an array of 4-tuples", 0);
    PDCode pd;
    for (const auto& t : arr) {
      if (!t.is_array() || t.size() != 4)
        throw ParseError("'pd' must be an array of 4-tuples", 0);
      std::array<std::int64_t, 4> x{};
      for (std::size_t s = 0; s < 4; ++s) {
        if (!t[s].is_number_integer())
          throw ParseError("'pd' entries must be integers", 0);
        x[s] = t[s].get<std::int64_t>();
        if (x[s] <= 0) throw ParseError("arc labels must be positive", 0);
      }
      pd.crossings.push_back(x);
    }
    if (j.contains("free_loops")) {
      const auto& fl = j.at("free_loops");
      if (!fl.is_number_integer() || fl.get<std::int64_t>() < 0 ||
          fl.get<std::int64_t>() > 0xFFFF)
        throw ParseError("'free_loops' must be a small nonnegative integer",
                         0);
      pd.free_loops = fl.get<std::uint32_t>();
    }
    if (pd.crossings.empty() && pd.free_loops == 0)
      throw ParseError("empty diagram: no crossings and no free loops", 0);
    return pd_to_diagram(pd);
  }

  if (j.contains("braid")) {
    const auto& b = j.at("braid");
    if (!b.is_object() || !b.contains("strands") || !b.contains("word"))
      throw ParseError("'braid' must be {\"strands\": n, \"word\": [...]}", 0);
    const auto& ns = b.at("strands");
    if (!ns.is_number_integer() || ns.get<std::int64_t>() < 1 ||
        ns.get<std::int64_t>() > 0xFFFF)
      throw ParseError("'strands' must be a positive integer", 0);
    BraidWord w;
    w.strand_count = ns.get<std::uint32_t>();
    const auto& word = b.at("word");
    if (!word.is_array())
      throw ParseError("'word' must be an array of nonzero integers", 0);
    for (const auto& letter : word) {
      if (!letter.is_number_integer())
        throw ParseError("'word' must be an array of nonzero integers", 0);
      const std::int64_t v = letter.get<std::int64_t>();
      if (v == 0 || v >= w.strand_count ||
          v <= -static_cast<std::int64_t>(w.strand_count))
        throw ParseError("generator " + std::to_string(v < 0 ? -v : v) +
                             " out of range for strand count " +
                             std::to_string(w.strand_count),
                         0);
      w.letters.push_back(static_cast<std::int32_t>(v));
    }
    return braid_closure(w);
  }

  const auto& g = j.at("gauss");
  if (!g.is_array())
    throw ParseError("'gauss' must be an array of components", 0);
  std::string text;
  bool first = true;
  for (const auto& comp : g) {
    if (!first) text += ';';
    first = false;
    if (comp.is_string()) {
      text += comp.get<std::string>();
    } else if (comp.is_array()) {
      for (const auto& tok : comp) {
        if (!tok.is_string())
          throw ParseError(
              "gauss component must be a string or an array of token strings",
              0);
        text += tok.get<std::string>();
      }
    } else {
      throw ParseError(
          "gauss component must be a string or an array of token strings", 0);
    }
  }
  return gauss_to_diagram(parse_gauss(text));
}

std::string invariants_to_text(const DiagramSummary& inv) {
  std::string s;
  s += "crossings: " + std::to_string(inv.crossings) + "\n";
  s += "components: " + std::to_string(inv.components) + "\n";
  s += "free loops: " + std::to_string(inv.free_loops) + "\n";
  s += "writhe: " + std::to_string(inv.writhe) + "\n";
  nlohmann::json rows = nlohmann::json::array();
  for (std::uint32_t i = 0; i < inv.linking.components; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::uint32_t k = 0; k < inv.linking.components; ++k)
      row.push_back(inv.linking.at(i, k));
    rows.push_back(std::move(row));
  }
  s += "linking matrix: " + rows.dump() + "\n";
  s += "seifert circles: " + std::to_string(inv.seifert_circles) + "\n";
  if (inv.euler_characteristic)
    s += "euler characteristic: " + std::to_string(*inv.euler_characteristic) +
         "\n";
  if (inv.genus) s += "genus: " + std::to_string(*inv.genus) + "\n";
  s += "bridge number: " + std::to_string(inv.bridge_count);
  return s;
}

std::string bridges_to_text(const BridgePresentation& p) {
  std::string s = "bridge number: " + std::to_string(p.bridge_count);
  auto dump = [&](const char* kind, const std::vector<Bridge>& list) {
    for (const Bridge& b : list) {
      s += std::string("\n") + kind + " bridge (component " +
           std::to_string(b.component) + "): crossings " +
           nlohmann::json(b.crossings).dump() + ", arcs " +
           nlohmann::json(b.arcs).dump();
    }
  };
  dump("over", p.over_bridges);
  dump("under", p.under_bridges);
  if (!p.crossing_free_components.empty())
    s += "\ncrossing-free components: " +
         nlohmann::json(p.crossing_free_components).dump();
  return s;
}

nlohmann::ordered_json bridges_to_json(const BridgePresentation& p) {
  auto one = [](const Bridge& b) {
    nlohmann::ordered_json x;
    x["component"] = b.component;
    x["crossings"] = b.crossings;
    x["arcs"] = b.arcs;
    return x;
  };
  nlohmann::ordered_json j;
  j["count"] = p.bridge_count;
  nlohmann::ordered_json over = nlohmann::ordered_json::array();
  for (const Bridge& b : p.over_bridges) over.push_back(one(b));
  nlohmann::ordered_json under = nlohmann::ordered_json::array();
  for (const Bridge& b : p.under_bridges) under.push_back(one(b));
  j["over"] = std::move(over);
  j["under"] = std::move(under);
  j["crossing_free_components"] = p.crossing_free_components;
  return j;
}

struct RawRecord {
  std::string text;
  std::optional<nlohmann::json> obj;
};

RecordResult analyze_one(const RawRecord& r, const AnalyzeOptions& o,
                         std::uint64_t idx) {
  RecordResult res;
  res.index = idx;
  res.input = r.obj ? r.obj->dump() : r.text;
  auto emit_error = [&](const std::string& msg,
                        std::optional<std::size_t> position) {
    res.error = true;
    if (o.json) {
      nlohmann::ordered_json rec;
      rec["input"] = res.input;
      rec["error"] = msg;
      if (position) rec["position"] = *position;
      rec["schema"] = 1;
      res.output = rec.dump();
    } else {
      res.output = "error: " + msg;
    }
  };
  try {
    const LinkDiagram d =
        r.obj ? diagram_from_json(*r.obj) : parse_record(r.text, o.format);
    switch (o.mode) {
      case AnalyzeOptions::Mode::Analyze: {
        const Certificate cert = certify(d, o.assume_nontrivial);
        if (o.json) {
          nlohmann::ordered_json rec;
          rec["input"] = res.input;
          const nlohmann::ordered_json body = certificate_to_json(cert);
          for (const auto& [k, v] : body.items()) rec[k] = v;
          rec["schema"] = 1;
          res.output = rec.dump();
        } else {
          res.output = certificate_to_text(cert);
        }
        break;
      }
      case AnalyzeOptions::Mode::Invariants: {
        const DiagramSummary inv = summarize(d);
        if (o.json) {
          nlohmann::ordered_json rec;
          rec["input"] = res.input;
          rec["invariants"] = invariants_to_json(inv);
          rec["schema"] = 1;
          res.output = rec.dump();
        } else {
          res.output = invariants_to_text(inv);
        }
        break;
      }
      case AnalyzeOptions::Mode::Bridges: {
        const BridgePresentation p = bridge_decomposition(d);
        if (o.json) {
          nlohmann::ordered_json rec;
          rec["input"] = res.input;
          rec["bridges"] = bridges_to_json(p);
          rec["schema"] = 1;
          res.output = rec.dump();
        } else {
          res.output = bridges_to_text(p);
        }
        break;
      }
    }
  } catch (const ParseError& e) {
    emit_error(e.what(), e.position());
  } catch (const std::exception& e) {
    emit_error(e.what(), std::nullopt);
  }
  return res;
}

}  // namespace

LinkDiagram parse_record(const std::string& line, InputFormat format) {
  const InputFormat f = format == InputFormat::Auto ? sniff(line) : format;
  switch (f) {
    case InputFormat::Pd:
      return pd_to_diagram(parse_pd(line));
    case InputFormat::Gauss:
      return gauss_to_diagram(parse_gauss(line));
    case InputFormat::Braid:
      return braid_closure(parse_braid(line));
    case InputFormat::Json: {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid json: ") + e.what(), e.byte);
      }
      return diagram_from_json(j);
    }
    case InputFormat::Auto:
      break;
  }
  throw ParseError("unrecognized input format", 0);
}

std::string certificate_to_text(const Certificate& cert) {
  std::string s;
  if (cert.positivity.positive) {
    s += "positivity: positive (witness orientation:";
    if (cert.positivity.witness_orientation) {
      for (const bool b : *cert.positivity.witness_orientation)
        s += b ? " 1" : " 0";
    }
    s += ")\n";
  } else {
    s += "positivity: negative";
    if (cert.positivity.obstruction_crossing)
      s += " (obstruction crossing " +
           std::to_string(*cert.positivity.obstruction_crossing) + ")";
    s += "\n";
  }
  s += std::string("connectivity: ") +
       (cert.connectivity ? "connected" : "disconnected") + "\n";
  if (!cert.cut_search.searched) {
    s += "diagram prime: not searched\n";
  } else if (cert.diagram_prime) {
    s += "diagram prime: yes (" +
         std::to_string(cert.cut_search.pair_candidates) +
         " pair candidates, " +
         std::to_string(cert.cut_search.single_candidates) +
         " single candidates)\n";
  } else {
    const CutWitness& w = *cert.cut;
    s += "diagram prime: no (cut arcs " + nlohmann::json(w.arcs).dump() +
         ", sides " + std::to_string(w.side_crossings[0]) + "/" +
         std::to_string(w.side_crossings[1]) + ")\n";
  }
  s += "nontrivial: " + to_string(cert.nontrivial.status);
  const NontrivialEvidence& ev = cert.nontrivial.evidence;
  if (ev.genus_criterion) {
    s += " (positive diagram, euler characteristic " +
         std::to_string(*ev.euler_characteristic) + ")";
  } else if (ev.linking_pair) {
    s += " (lk(" + std::to_string((*ev.linking_pair)[0]) + "," +
         std::to_string((*ev.linking_pair)[1]) +
         ") = " + std::to_string(*ev.linking_value) + ")";
  }
  s += "\n";
  s += "splitness: " + to_string(cert.splitness) + "\n";
  s += "primeness: " + to_string(cert.primeness) + "\n";
  s += invariants_to_text(cert.invariants) + "\n";
  s += std::string("linking graph connected: ") +
       (cert.linking_graph_witness ? "yes" : "no");
  return s;
}

BatchResult analyze_batch(std::istream& in, const AnalyzeOptions& opts) {
  const std::string all{std::istreambuf_iterator<char>(in),
                        std::istreambuf_iterator<char>()};

  std::vector<RawRecord> raw;
  std::optional<std::string> top_error;
  const std::size_t nz = all.find_first_not_of(" \t\r\n");
  if (nz != std::string::npos && all[nz] == '[') {
    try {
      nlohmann::json arr = nlohmann::json::parse(all);
      for (auto& el : arr) {
        if (el.is_string())
          raw.push_back({trim(el.get<std::string>()), std::nullopt});
        else
          raw.push_back({"", std::move(el)});
      }
    } catch (const nlohmann::json::parse_error& e) {
      top_error = std::string("invalid json array: ") + e.what();
    }
  } else {
    std::istringstream lines(all);
    std::string line;
    while (std::getline(lines, line)) {
      const std::string t = trim(line);
      if (t.empty() || t[0] == '#') continue;
      raw.push_back({t, std::nullopt});
    }
  }

  BatchResult out;
  if (top_error) {
    RecordResult res;
    res.error = true;
    if (opts.json) {
      nlohmann::ordered_json rec;
      rec["input"] = "";
      rec["error"] = *top_error;
      rec["schema"] = 1;
      res.output = rec.dump();
    } else {
      res.output = "error: " + *top_error;
    }
    out.records.push_back(std::move(res));
  } else {
    const std::size_t n = raw.size();
    out.records.resize(n);
    const std::size_t jobs =
        std::min<std::size_t>(std::max<std::uint32_t>(1, opts.jobs), n);
    if (jobs <= 1) {
      for (std::size_t i = 0; i < n; ++i)
        out.records[i] = analyze_one(raw[i], opts, i);
    } else {
      std::atomic<std::size_t> cursor{0};
      auto work = [&] {
        for (;;) {
          const std::size_t i = cursor.fetch_add(1);
          if (i >= n) return;
          out.records[i] = analyze_one(raw[i], opts, i);
        }
      };
      std::vector<std::thread> pool;
      pool.reserve(jobs);
      for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
  }

  for (const auto& r : out.records) {
    if (r.error)
      ++out.failed;
    else
      ++out.parsed;
  }

  std::string text;
  for (const auto& r : out.records) {
    if (opts.json) {
      text += r.output;
      text += '\n';
    } else {
      text += "record " + std::to_string(r.index) + ": " + r.input + "\n";
      text += r.output;
      text += "\n\n";
    }
  }
  if (opts.json) {
    nlohmann::ordered_json s;
    nlohmann::ordered_json counts;
    counts["records"] = out.records.size();
    counts["parsed"] = out.parsed;
    counts["failed"] = out.failed;
    s["summary"] = std::move(counts);
    text += s.dump();
    text += '\n';
  } else {
    text += "records " + std::to_string(out.records.size()) + ", parsed " +
            std::to_string(out.parsed) + ", failed " +
            std::to_string(out.failed) + "\n";
  }
  out.rendered = std::move(text);
  return out;
}

}  // namespace knotcert
