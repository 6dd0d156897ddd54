#include "kbracket/io.hpp"

#include <json.hpp>

#include <array>
#include <limits>

namespace kbracket {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

template <typename F>
auto guarded(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(what + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(what + ": " + e.what());
  }
}

json end_json(int id) {
  const StrandEnd e = Diagram::end_of(id);
  return json::array({e.crossing, e.slot});
}

int end_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("strand end must be [crossing, slot]");
  const int c = j.at(0).get<int>(), s = j.at(1).get<int>();
  if (c < 0 || s < 0 || s > 3) throw ParseError("strand end out of range");
  return Diagram::end_id(c, s);
}

json pairing_json(int crossing, Pairing p) {
  const int other = p == Pairing::P01_23 ? 1 : p == Pairing::P02_13 ? 2 : 3;
  const int rest_lo = other == 1 ? 2 : 1;
  const int rest_hi = 6 - other - rest_lo;
  return json::array({json::array({json::array({crossing, 0}), json::array({crossing, other})}),
                      json::array({json::array({crossing, rest_lo}), json::array({crossing, rest_hi})})});
}

Pairing pairing_from_json(int crossing, const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("smoothing must list two slot pairs");
  std::array<int, 4> partner{-1, -1, -1, -1};
  for (const json& pr : j) {
    if (!pr.is_array() || pr.size() != 2) throw ParseError("smoothing pair must have two ends");
    const int x = end_from_json(pr.at(0)), y = end_from_json(pr.at(1));
    if (x / 4 != crossing || y / 4 != crossing) throw ParseError("smoothing pairs a foreign crossing's slots");
    if (partner[x % 4] != -1 || partner[y % 4] != -1 || x == y) throw ParseError("smoothing repeats a slot");
    partner[x % 4] = y % 4;
    partner[y % 4] = x % 4;
  }
  switch (partner[0]) {
    case 1: return Pairing::P01_23;
    case 2: return Pairing::P02_13;
    default: return Pairing::P03_12;
  }
}

json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw ParseError("coefficient must be an integer or a decimal string");
}

}  // namespace

std::string diagram_to_json(const Diagram& d) {
  json crossings = json::array();
  for (int i = 0; i < d.crossing_count(); ++i)
    crossings.push_back({{"a", pairing_json(i, d.crossing(i).a)}, {"b", pairing_json(i, d.crossing(i).b)}});
  json arcs = json::array();
  for (int e = 0; e < 4 * d.crossing_count(); ++e)
    if (e < d.arc_partner(e)) arcs.push_back(json::array({end_json(e), end_json(d.arc_partner(e))}));
  return json{{"crossings", crossings}, {"arcs", arcs}, {"free_circles", d.free_circles()}}.dump();
}

Diagram diagram_from_json(const std::string& text) {
  const json j = parse(text);
  return guarded("diagram", [&] {
    const json& cj = j.at("crossings");
    const int n = static_cast<int>(cj.size());
    std::vector<Crossing> crossings;
    for (int i = 0; i < n; ++i)
      crossings.push_back({pairing_from_json(i, cj.at(i).at("a")), pairing_from_json(i, cj.at(i).at("b"))});
    std::vector<int> arcs(4 * n, -1);
    for (const json& arc : j.at("arcs")) {
      if (!arc.is_array() || arc.size() != 2) throw ParseError("arc must join two ends");
      const int x = end_from_json(arc.at(0)), y = end_from_json(arc.at(1));
      if (x >= 4 * n || y >= 4 * n) throw ParseError("arc names a missing crossing");
      if (arcs[x] != -1 || arcs[y] != -1) throw ParseError("strand end used by two arcs");
      arcs[x] = y;
      arcs[y] = x;
    }
    const int free = j.value("free_circles", 0);
    return Diagram(std::move(crossings), std::move(arcs), free);
  });
}

std::string chord_diagram_to_json(const ChordDiagram& cd) {
  json chords = json::array();
  for (const Chord& c : cd.chords)
    chords.push_back({{"ends", json::array({c.p, c.q})},
                      {"twist", c.twist == Twist::Coherent ? "coherent" : "reversing"}});
  return json{{"circles", cd.circles}, {"chords", chords}}.dump();
}

ChordDiagram chord_diagram_from_json(const std::string& text) {
  const json j = parse(text);
  return guarded("chord diagram", [&] {
    ChordDiagram cd;
    cd.circles = j.at("circles").get<std::vector<std::vector<int>>>();
    for (const json& c : j.at("chords")) {
      const auto ends = c.at("ends").get<std::array<int, 2>>();
      const std::string twist = c.at("twist").get<std::string>();
      if (twist != "coherent" && twist != "reversing") throw ParseError("unknown twist '" + twist + "'");
      cd.chords.push_back({ends[0], ends[1], twist == "coherent" ? Twist::Coherent : Twist::Reversing});
    }
    cd.validate();
    return cd;
  });
}

std::string graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  return json{{"vertices", g.vertex_count()}, {"edges", edges}}.dump();
}

Graph graph_from_json(const std::string& text) {
  const json j = parse(text);
  return guarded("graph", [&] {
    const int n = j.at("vertices").get<int>();
    if (n < 0) throw ParseError("negative vertex count");
    Graph g(n);
    for (const json& e : j.at("edges")) {
      const auto uv = e.get<std::array<int, 2>>();
      g.add_edge(uv[0], uv[1]);
    }
    return g;
  });
}

std::string laurent_to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [deg, c] : p.terms()) terms.push_back(json::array({deg, integer_json(c)}));
  return terms.dump();
}

LaurentPoly laurent_from_json(const std::string& text) {
  const json j = parse(text);
  return guarded("polynomial", [&] {
    if (!j.is_array()) throw ParseError("polynomial must be a list of [degree, coefficient]");
    std::vector<std::pair<int, Integer>> terms;
    for (const json& t : j) {
      if (!t.is_array() || t.size() != 2) throw ParseError("term must be [degree, coefficient]");
      terms.emplace_back(t.at(0).get<int>(), integer_from_json(t.at(1)));
    }
    return LaurentPoly::from_terms(terms);
  });
}

}  // namespace kbracket
