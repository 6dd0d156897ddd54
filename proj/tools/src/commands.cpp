#include "kbracket_cli/commands.hpp"

#include "kbracket/chords.hpp"
#include "kbracket/families.hpp"
#include "kbracket/io.hpp"
#include "kbracket_cli/verify.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <sstream>

namespace kbracket::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

Integer sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

std::string edge_list_text(const Graph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) out += (out.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
  return out.empty() ? "(none)" : out;
}

void require_params(const std::string& family, const std::vector<int>& params, std::size_t n) {
  if (params.size() != n)
    throw UsageError("family " + family + " takes " + std::to_string(n) + " parameter" + (n == 1 ? "" : "s") +
                     ", got " + std::to_string(params.size()));
}

RootedGraph generate_graph(const std::string& family, const std::vector<int>& p) {
  if (family == "G") {
    require_params(family, p, 1);
    if (p[0] < 1) throw UsageError("G needs r >= 1");
    return family_G(p[0]);
  }
  if (family == "F") {
    require_params(family, p, 1);
    if (p[0] < 1) throw UsageError("F needs r >= 1");
    return family_F(p[0]);
  }
  if (family == "hexagon") {
    require_params(family, p, 0);
    return hexagon();
  }
  if (family == "path" || family == "L") {
    require_params(family, p, 1);
    if (p[0] < 0) throw UsageError("path needs n >= 0");
    return {path(p[0]), 0};
  }
  if (family == "cycle" || family == "C") {
    require_params(family, p, 1);
    if (p[0] < 3) throw UsageError("cycle needs n >= 3");
    return {cycle(p[0]), 0};
  }
  throw UsageError("unknown graph family '" + family + "' (known: G, F, hexagon, path, cycle)");
}

Diagram generate_diagram(const std::string& family, const std::vector<int>& p) {
  try {
    if (family == "pretzel") return pretzel(p);
    if (family == "D") {
      require_params(family, p, 1);
      return d_family(p[0]);
    }
    if (family == "Drs") {
      require_params(family, p, 2);
      return d_rs(p[0], p[1]);
    }
    if (family == "Drsa") {
      require_params(family, p, 3);
      return d_rs_alpha(p[0], p[1], p[2]);
    }
    if (family == "L") {
      require_params(family, p, 4);
      return l_family(p[0], p[1], p[2], p[3]);
    }
    if (family == "K") {
      require_params(family, p, 4);
      return k_family(p[0], p[1], p[2], p[3]);
    }
    if (family == "G" || family == "F") return diagram_from_graph(generate_graph(family, p).graph);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown diagram family '" + family + "' (known: pretzel, D, Drs, Drsa, L, K, G, F)");
}

}  // namespace

void RunConfig::validate() const {
  if (limit < 0 || limit > kMaxEnumerationLimit)
    throw UsageError("--limit must lie in 0.." + std::to_string(kMaxEnumerationLimit));
  if (workers < 1) throw UsageError("--workers must be at least 1");
}

Graph parse_graph(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return graph_from_json(text);
  try {
    return parse_edge_list(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

int cmd_bracket(const std::string& diagram_json, const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  const Diagram d = diagram_from_json(diagram_json);
  const LaurentPoly p = bracket(d, cfg.enumeration());
  const ExtremeDegrees ed = extreme_degrees(d);
  const SpanInfo span = span_min_max(p);
  const bool m_attained = span.min_degree == ed.m, M_attained = span.max_degree == ed.M;
  if (cfg.format == Format::Json) {
    ordered_json doc = {{"bracket", ordered_json::parse(laurent_to_json(p))},
                        {"span", span.span},
                        {"m", ed.m},
                        {"M", ed.M},
                        {"m_attained", m_attained},
                        {"M_attained", M_attained}};
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << p.to_string() << ", span=" << span.span;
  if (d.crossing_count() > 0) out << ", m=" << ed.m << ", M=" << ed.M;
  out << '\n';
  if (d.crossing_count() > 0 && !(m_attained && M_attained)) {
    out << "extremes: m " << (m_attained ? "attained" : "not attained (lowest degree " + std::to_string(span.min_degree) + ")")
        << ", M " << (M_attained ? "attained" : "not attained (highest degree " + std::to_string(span.max_degree) + ")")
        << '\n';
  }
  return kExitOk;
}

int cmd_analyze(const std::string& diagram_json, const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  const Diagram d = diagram_from_json(diagram_json);
  const ExtremeDegrees ed = extreme_degrees(d);
  const ExtremeCoeffs ec = extreme_coeffs(d);
  const Graph ga = lando_graph(a_state_chords(d));
  const Graph gb = lando_graph(a_state_chords(mirror(d)));
  const Integer fa = f_reduced(ga), fb = f_reduced(gb);
  // The identity is checked against the state sum over Gamma_A / Gamma_B when
  // that enumeration fits the limit; otherwise only the Lando route runs.
  std::optional<SecondCoeffs> sc;
  ExtremeCoeffs by_states = ec;
  const bool enumerated = d.crossing_count() <= cfg.limit;
  if (enumerated) {
    sc = second_coeffs(d, cfg.enumeration());
    by_states = extreme_coeffs_by_states(d, cfg.enumeration());
  }
  const bool id_a = by_states.a_M == sign_pow(ed.circles_a - 1) * fa;
  const bool id_b = by_states.a_m == sign_pow(ed.circles_b - 1) * fb;
  const char* verdict_a = !enumerated ? "not checked (over limit)" : id_a ? "holds" : "FAILS";
  const char* verdict_b = !enumerated ? "not checked (over limit)" : id_b ? "holds" : "FAILS";
  if (cfg.format == Format::Json) {
    ordered_json doc = {{"crossings", d.crossing_count()},
                        {"circles_a", ed.circles_a},
                        {"circles_b", ed.circles_b},
                        {"m", ed.m},
                        {"M", ed.M},
                        {"a_m", ec.a_m.str()},
                        {"a_M", ec.a_M.str()},
                        {"a_m_plus_4", sc ? ordered_json(sc->a_m_plus_4.str()) : ordered_json(nullptr)},
                        {"a_M_minus_4", sc ? ordered_json(sc->a_M_minus_4.str()) : ordered_json(nullptr)},
                        {"lando_a", ordered_json::parse(graph_to_json(ga))},
                        {"lando_b", ordered_json::parse(graph_to_json(gb))},
                        {"f_a", fa.str()},
                        {"f_b", fb.str()},
                        {"identity_a", enumerated ? ordered_json(id_a) : ordered_json(nullptr)},
                        {"identity_b", enumerated ? ordered_json(id_b) : ordered_json(nullptr)}};
    out << doc.dump(2) << '\n';
  } else {
    out << "crossings: " << d.crossing_count() << '\n'
        << "|s_A|: " << ed.circles_a << '\n'
        << "|s_B|: " << ed.circles_b << '\n'
        << "m: " << ed.m << '\n'
        << "M: " << ed.M << '\n'
        << "a_m: " << ec.a_m << '\n'
        << "a_M: " << ec.a_M << '\n';
    if (sc) {
      out << "a_m+4: " << sc->a_m_plus_4 << '\n' << "a_M-4: " << sc->a_M_minus_4 << '\n';
    } else {
      out << "a_m+4: skipped (" << d.crossing_count() << " crossings > limit " << cfg.limit << ")\n"
          << "a_M-4: skipped\n";
    }
    out << "A-Lando graph: " << ga.vertex_count() << " vertices, edges " << edge_list_text(ga) << '\n'
        << "B-Lando graph: " << gb.vertex_count() << " vertices, edges " << edge_list_text(gb) << '\n'
        << "f(A-Lando): " << fa << '\n'
        << "f(B-Lando): " << fb << '\n'
        << "a_M = (-1)^(|s_A|-1) f(A-Lando): " << verdict_a << '\n'
        << "a_m = (-1)^(|s_B|-1) f(B-Lando): " << verdict_b << '\n';
  }
  return id_a && id_b ? kExitOk : kExitFailure;
}

int cmd_graph_f(const std::string& graph_text, const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  const Graph g = parse_graph(graph_text);
  const Integer f = f_reduced(g);
  std::optional<Integer> naive;
  if (g.vertex_count() <= 20) naive = f_naive(g);
  const bool agree = !naive || *naive == f;
  if (cfg.format == Format::Json) {
    ordered_json doc = {{"vertices", g.vertex_count()},
                        {"f", f.str()},
                        {"f_naive", naive ? ordered_json(naive->str()) : ordered_json(nullptr)}};
    out << doc.dump(2) << '\n';
  } else {
    out << f << '\n';
    if (naive && !agree) out << "naive enumeration disagrees: " << *naive << '\n';
  }
  return agree ? kExitOk : kExitFailure;
}

int cmd_generate(const std::string& kind, const std::string& family, const std::vector<int>& params,
                 const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  if (kind == "graph") {
    const RootedGraph g = generate_graph(family, params);
    if (cfg.format == Format::Json) {
      out << graph_to_json(g.graph) << '\n';
    } else {
      out << "# root " << g.root << '\n' << to_edge_list(g.graph);
    }
    return kExitOk;
  }
  if (kind == "diagram") {
    out << diagram_to_json(generate_diagram(family, params)) << '\n';
    return kExitOk;
  }
  throw UsageError("generate expects 'graph' or 'diagram', got '" + kind + "'");
}

int cmd_realize(const std::string& graph_text, const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  const Graph g = parse_graph(graph_text);
  const auto cd = realize_as_chord_diagram(g);
  if (!cd) {
    out << "no one-circle realization found within " << kRealizeMaxVertices << " vertices\n";
    return kExitFailure;
  }
  if (cfg.format == Format::Json) {
    ordered_json doc = {{"chord_diagram", ordered_json::parse(chord_diagram_to_json(*cd))},
                        {"diagram", ordered_json::parse(diagram_to_json(to_diagram(*cd)))}};
    out << doc.dump(2) << '\n';
  } else {
    out << chord_diagram_to_json(*cd) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const std::string& theorem, const std::vector<std::string>& grid, const RunConfig& cfg,
               std::ostream& out) {
  const VerifyReport report = run_verify(theorem, grid, cfg);
  out << (cfg.format == Format::Json ? render_json(report) : render_text(report));
  return report.count(RowStatus::Fail) == 0 ? kExitOk : kExitFailure;
}

}  // namespace kbracket::cli
