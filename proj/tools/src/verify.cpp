#include "kbracket_cli/verify.hpp"

#include "kbracket/chords.hpp"
#include "kbracket/families.hpp"
#include "kbracket/graphs.hpp"
#include "kbracket/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

namespace kbracket::cli {
namespace {

using Tuple = std::vector<int>;

std::string str(const Integer& v) { return v.str(); }
std::string str(int v) { return std::to_string(v); }
std::string str(bool v) { return v ? "yes" : "no"; }
std::string str(const std::string& v) { return v; }

Integer sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

class RowBuilder {
 public:
  RowBuilder(std::string theorem, std::string params) {
    row_.theorem = std::move(theorem);
    row_.params = std::move(params);
  }

  template <typename T>
  void check(const std::string& name, const T& expected, const T& actual) {
    row_.checks.push_back({name, str(expected), str(actual), expected == actual});
  }
  void partial(std::string note) {
    partial_ = true;
    note_line(std::move(note));
  }
  void note_line(std::string note) {
    if (!row_.note.empty()) row_.note += "; ";
    row_.note += note;
  }
  VerifyRow skip(std::string note) {
    row_.status = RowStatus::Skip;
    row_.checks.clear();
    row_.note = std::move(note);
    return row_;
  }
  VerifyRow done() {
    const bool failed = std::any_of(row_.checks.begin(), row_.checks.end(), [](const Check& c) { return !c.ok; });
    row_.status = failed ? RowStatus::Fail : partial_ ? RowStatus::Partial : RowStatus::Pass;
    return row_;
  }

 private:
  VerifyRow row_;
  bool partial_ = false;
};

std::string label(const std::vector<std::string>& names, const Tuple& t) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ' ';
    out += names[i] + '=' + std::to_string(t[i]);
  }
  return out;
}

struct Context {
  EnumerationConfig enumeration;
};

// Vertices with identical open neighbourhoods collapse to one; returns the
// quotient and the class sizes.
Graph collapse_twins(const Graph& g, std::vector<int>* class_sizes) {
  std::map<std::vector<int>, std::vector<int>> classes;
  for (int v = 0; v < g.vertex_count(); ++v) classes[g.neighbors(v)].push_back(v);
  std::vector<int> keep;
  if (class_sizes) class_sizes->clear();
  for (auto& [nbrs, members] : classes) {
    keep.push_back(members.front());
    if (class_sizes) class_sizes->push_back(static_cast<int>(members.size()));
  }
  std::sort(keep.begin(), keep.end());
  return g.induced(keep);
}

Graph a_lando(const Diagram& d) { return lando_graph(a_state_chords(d)); }
Graph b_lando(const Diagram& d) { return lando_graph(a_state_chords(mirror(d))); }

// Shared tail of every diagram row: runs the full bracket when the diagram
// fits the limit and returns it, or marks the row partial.
std::optional<LaurentPoly> full_bracket(const Diagram& d, const Context& ctx, RowBuilder& row) {
  if (d.crossing_count() > ctx.enumeration.limit) {
    row.partial("full bracket skipped: " + std::to_string(d.crossing_count()) + " crossings > limit " +
                std::to_string(ctx.enumeration.limit));
    return std::nullopt;
  }
  return bracket(d, ctx.enumeration);
}

// ---- graph theorems --------------------------------------------------------

Integer expected_path_f(int n, std::map<int, Integer>& memo) {
  static const Integer literal[] = {1, 0, -1, -1, 1};
  if (n <= 4) return literal[n];
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  return memo[n] = -f_reduced(path(n - 3));
}

std::vector<VerifyRow> rows_paths(const Tuple& t, const Context&) {
  const int n = t[0];
  RowBuilder row("paths", "n=" + std::to_string(n));
  std::map<int, Integer> memo;
  const Integer fl = f_reduced(path(n));
  row.check("f(L_n)", expected_path_f(n, memo), fl);
  if (n <= kNaiveVertexLimit) row.check("f_naive(L_n)", fl, f_naive(path(n)));
  if (n >= 3) {
    const Integer expected = n == 6 ? Integer(2) : f_reduced(path(n - 1)) - f_reduced(n == 3 ? Graph(0) : path(n - 3));
    row.check("f(C_n)", expected, f_reduced(cycle(n)));
  }
  return {row.done()};
}

std::vector<VerifyRow> rows_thm1(const Tuple& t, const Context&) {
  const int r = t[0];
  RowBuilder row("thm1", "r=" + std::to_string(r));
  const RootedGraph g = family_G(r);
  row.check("f(G_r)", Integer(r + 1), f_reduced(g.graph));
  if (g.graph.vertex_count() <= kNaiveVertexLimit) row.check("f_naive(G_r)", Integer(r + 1), f_naive(g.graph));
  row.check("f(G_r^-)", Integer(-(r + 1)), f_reduced(negate(g)));
  if (g.graph.vertex_count() <= kRealizeMaxVertices) {
    const Diagram d = diagram_from_graph(g.graph);
    const ExtremeDegrees ed = extreme_degrees(d);
    row.check("a_M of realization", sign_pow(ed.circles_a - 1) * (r + 1), extreme_coeffs(d).a_M);
  } else {
    row.note_line("realization skipped above " + std::to_string(kRealizeMaxVertices) + " vertices");
  }
  return {row.done()};
}

Integer fibonacci(int n) {
  Integer a = 1, b = 1;
  for (int i = 2; i < n; ++i) {
    Integer c = a + b;
    a = b;
    b = c;
  }
  return b;
}

std::vector<VerifyRow> rows_fibonacci(const Tuple& t, const Context&) {
  const int r = t[0];
  RowBuilder row("fibonacci", "r=" + std::to_string(r));
  const RootedGraph g = family_F(r);
  const BrickType type = brick_type(g);
  row.check("f(F_r)", fibonacci(r + 2), type.n);
  row.check("f(F_r - root)", fibonacci(r + 1), type.k);
  if (g.graph.vertex_count() <= kNaiveVertexLimit) row.check("f_naive(F_r)", fibonacci(r + 2), f_naive(g.graph));
  return {row.done()};
}

struct NamedBrick {
  std::string name;
  RootedGraph brick;
};

const std::vector<NamedBrick>& lemma_bricks() {
  static const std::vector<NamedBrick> bricks = [] {
    std::vector<NamedBrick> out{{"H", hexagon()}, {"L3", rooted_path(3)}};
    if (auto b = brick_search(5, 3, 8)) out.push_back({"B53", *b});
    return out;
  }();
  return bricks;
}

BrickType naive_type(const Graph& g, int root) { return {f_naive(g), f_naive(g.without_vertex(root))}; }

std::string type_str(const BrickType& t) { return "(" + t.n.str() + "," + t.k.str() + ")"; }

void check_type(RowBuilder& row, const std::string& name, const BrickType& expected, const BrickType& actual) {
  row.check(name, type_str(expected), type_str(actual));
}

std::vector<VerifyRow> rows_lemma3(const Tuple& t, const Context&) {
  const int k = t[0];
  const auto& catalogue = lemma_bricks();
  const int b = static_cast<int>(catalogue.size());
  std::vector<VerifyRow> rows;
  std::vector<int> pick(k, 0);
  while (true) {
    std::vector<RootedGraph> bricks;
    std::vector<BrickType> types;
    std::string name;
    for (int i = 0; i < k; ++i) {
      bricks.push_back(catalogue[pick[i]].brick);
      types.push_back(brick_type(bricks.back()));
      name += (i ? "," : "") + catalogue[pick[i]].name;
    }
    RowBuilder row("lemma3", "k=" + std::to_string(k) + " bricks=" + name);
    const Building s = building_simple(bricks);
    const Building c = building_complicated(bricks);
    if (c.graph.vertex_count() > kNaiveVertexLimit) {
      rows.push_back(row.skip("building exceeds the naive f limit of " + std::to_string(kNaiveVertexLimit) +
                              " vertices"));
    } else {
      Integer prod_n = 1, prod_m = 1, prod_d = 1;
      for (const auto& ty : types) {
        prod_n *= ty.n;
        prod_m *= ty.k;
        prod_d *= ty.n - ty.k;
      }
      check_type(row, "(1) S^w", {prod_n - prod_m, prod_n}, naive_type(s.graph, s.center));
      check_type(row, "(3) C^w", {prod_d - prod_n, prod_d}, naive_type(c.graph, c.center));
      for (int j = 0; j < k; ++j) {
        Integer others_n = 1, others_d = 1;
        for (int i = 0; i < k; ++i) {
          if (i == j) continue;
          others_n *= types[i].n;
          others_d *= types[i].n - types[i].k;
        }
        const std::string idx = std::to_string(j + 1);
        check_type(row, "(2) S^v" + idx, {prod_n - prod_m, types[j].k * others_n - prod_m},
                   naive_type(s.graph, s.roots[j]));
        check_type(row, "(4) C^v" + idx, {prod_d - prod_n, -types[j].k * others_n}, naive_type(c.graph, c.roots[j]));
        check_type(row, "(5) C^w" + idx, {prod_d - prod_n, types[j].n * others_d - prod_n},
                   naive_type(c.graph, c.intermediates[j]));
      }
      rows.push_back(row.done());
    }
    int i = k - 1;
    while (i >= 0 && ++pick[i] == b) pick[i--] = 0;
    if (i < 0) break;
  }
  return rows;
}

std::vector<VerifyRow> rows_example(const Tuple&, const Context&) {
  RowBuilder row("example", "S(B53,B53,H)");
  const auto b53 = brick_search(5, 3, 8);
  if (!b53) return {row.skip("no (5,3) brick within 8 vertices")};
  row.check("type(B53)", type_str({5, 3}), type_str(brick_type(*b53)));
  const Building s = building_simple({*b53, *b53, hexagon()});
  row.check("f(S)", Integer(41), f_reduced(s.graph));
  if (s.graph.vertex_count() <= kNaiveVertexLimit) row.check("f_naive(S)", Integer(41), f_naive(s.graph));
  return {row.done()};
}

// Simple buildings over hexagon-chain bricks and short rooted paths, with at
// most h hexagons in total.
std::vector<VerifyRow> rows_primes(const Tuple& t, const Context&) {
  const int h = t[0];
  struct Entry {
    std::string name;
    RootedGraph brick;
    int hexagons;
  };
  std::vector<Entry> catalogue;
  for (int n = 1; n <= 3; ++n) catalogue.push_back({"L" + std::to_string(n), rooted_path(n), 0});
  for (int r = 1; r <= h; ++r) catalogue.push_back({"G" + std::to_string(r), family_G(r), r});
  for (int r = 2; r <= h; ++r) catalogue.push_back({"F" + std::to_string(r), family_F(r), r});
  std::map<Integer, std::string> witness;
  const int n = static_cast<int>(catalogue.size());
  std::function<void(int, std::vector<int>&)> grow = [&](int from, std::vector<int>& pick) {
    if (!pick.empty()) {
      std::vector<RootedGraph> bricks;
      std::string name;
      for (int i : pick) {
        bricks.push_back(catalogue[i].brick);
        name += (name.empty() ? "" : ",") + catalogue[i].name;
      }
      const Integer f = Integer(abs(f_reduced(building_simple(bricks).graph)));
      witness.emplace(f, "S(" + name + ")");
    }
    if (pick.size() == 3) return;
    int used = 0;
    for (int i : pick) used += catalogue[i].hexagons;
    for (int i = from; i < n; ++i) {
      if (used + catalogue[i].hexagons > h) continue;
      pick.push_back(i);
      grow(i, pick);
      pick.pop_back();
    }
  };
  std::vector<int> pick;
  grow(0, pick);
  std::vector<VerifyRow> rows;
  for (int p = 2; p <= 50; ++p) {
    bool prime = true;
    for (int q = 2; q * q <= p; ++q) prime = prime && p % q != 0;
    if (!prime || p == 41) continue;
    RowBuilder row("primes", "h=" + std::to_string(h) + " p=" + std::to_string(p));
    const auto it = witness.find(Integer(p));
    row.check("realized", true, it != witness.end());
    if (it != witness.end()) row.note_line(it->second);
    rows.push_back(row.done());
  }
  return rows;
}

// ---- diagram theorems ------------------------------------------------------

struct Extremes {
  ExtremeDegrees degrees;
  ExtremeCoeffs coeffs;
};

Extremes structural(const Diagram& d, RowBuilder& row, int c, int sa, int sb) {
  const ExtremeDegrees ed = extreme_degrees(d);
  row.check("c", c, d.crossing_count());
  row.check("|s_A|", sa, ed.circles_a);
  row.check("|s_B|", sb, ed.circles_b);
  return {ed, extreme_coeffs(d)};
}

std::vector<VerifyRow> rows_thm2(const Tuple& t, const Context& ctx) {
  const int r = t[0];
  RowBuilder row("thm2", "r=" + std::to_string(r));
  const Diagram d = d_family(r);
  const Extremes ex = structural(d, row, 12 * r, 1, 6 * r + 3);
  row.check("m", -24 * r - 4, ex.degrees.m);
  row.check("M", 12 * r, ex.degrees.M);
  row.check("a_m", Integer(1), ex.coeffs.a_m);
  row.check("a_M", Integer(r + 1), ex.coeffs.a_M);
  std::vector<int> sizes;
  const Graph quotient = collapse_twins(a_lando(d), &sizes);
  row.check("A-Lando twin classes", std::vector<int>(6 * r, 2) == sizes, true);
  if (quotient.vertex_count() <= 12) row.check("A-Lando / twins = G_r", true, isomorphic(quotient, family_G(r).graph));
  row.check("B-Lando vertices", 0, b_lando(d).vertex_count());
  if (const auto p = full_bracket(d, ctx, row)) {
    row.check("min degree", -24 * r - 4, p->min_degree());
    row.check("max degree", 12 * r, p->max_degree());
    row.check("coeff at m", Integer(1), p->coeff(p->min_degree()));
    row.check("coeff at M", Integer(r + 1), p->coeff(p->max_degree()));
    row.check("span", 36 * r + 4, p->span());
  }
  return {row.done()};
}

void extreme_bracket_checks(const Diagram& d, const Context& ctx, RowBuilder& row, const Extremes& ex,
                            const Integer& a_m, const Integer& a_M) {
  row.check("m", -d.crossing_count() - 2 * ex.degrees.circles_b + 2, ex.degrees.m);
  row.check("M", d.crossing_count() + 2 * ex.degrees.circles_a - 2, ex.degrees.M);
  row.check("a_m", a_m, ex.coeffs.a_m);
  row.check("a_M", a_M, ex.coeffs.a_M);
  if (const auto p = full_bracket(d, ctx, row)) {
    row.check("bracket a_m", a_m, p->coeff(ex.degrees.m));
    row.check("bracket a_M", a_M, p->coeff(ex.degrees.M));
    row.check("span", ex.degrees.M - ex.degrees.m, p->span());
  }
}

std::vector<VerifyRow> rows_thm3(const Tuple& t, const Context& ctx) {
  const int r = t[0], s = t[1];
  RowBuilder row("thm3", label({"r", "s"}, t));
  const Diagram d = d_rs(r, s);
  const Extremes ex = structural(d, row, 12 * (r + s) + 2, 6 * s + 3, 6 * r + 3);
  extreme_bracket_checks(d, ctx, row, ex, s + 1, r + 1);
  return {row.done()};
}

std::vector<VerifyRow> rows_thm4(const Tuple& t, const Context& ctx) {
  const int r = t[0], s = t[1], alpha = t[2];
  RowBuilder row("thm4", label({"r", "s", "alpha"}, t));
  const Diagram d = d_rs_alpha(r, s, alpha);
  const Extremes ex = structural(d, row, 12 * (r + s) + 2 + alpha, 6 * s + alpha + 2, 6 * r + 4);
  extreme_bracket_checks(d, ctx, row, ex, -(s + 1), r + 1);
  return {row.done()};
}

void two_parallel_chords(const Graph& g, RowBuilder& row, const std::string& side) {
  row.check(side + "-Lando vertices", 2, g.vertex_count());
  row.check(side + "-Lando edges", 0, g.edge_count());
}

std::vector<VerifyRow> rows_thm5(const Tuple& t, const Context& ctx) {
  const int r = t[0], s = t[1], alpha = t[2], beta = t[3];
  RowBuilder row("thm5", label({"r", "s", "alpha", "beta"}, t));
  const Diagram d = l_family(r, s, alpha, beta);
  const Extremes ex = structural(d, row, 2 * r + 2 * s + alpha + beta + 4, r + s + alpha, r + s + beta);
  row.check("a_m", Integer(0), ex.coeffs.a_m);
  row.check("a_M", Integer(0), ex.coeffs.a_M);
  two_parallel_chords(a_lando(d), row, "A");
  two_parallel_chords(b_lando(d), row, "B");
  row.check("components", r + s + 2 - alpha % 2 - beta % 2, link_components(d));
  if (const auto p = full_bracket(d, ctx, row)) {
    const int top = 4 * r + 4 * s + 3 * alpha + beta - 2;
    const int bottom = -4 * r - 4 * s - alpha - 3 * beta + 2;
    row.check("max degree", top, p->max_degree());
    row.check("M-4", ex.degrees.M - 4, p->max_degree());
    row.check("a_{M-4}", sign_pow(r + s + alpha - 1) * s, p->coeff(top));
    row.check("min degree", bottom, p->min_degree());
    row.check("m+4", ex.degrees.m + 4, p->min_degree());
    row.check("a_{m+4}", sign_pow(r + s + beta - 1) * r, p->coeff(bottom));
    row.check("span", 8 * (r + s) + 4 * (alpha + beta) - 4, p->span());
  }
  return {row.done()};
}

std::vector<VerifyRow> rows_thm6(const Tuple& t, const Context& ctx) {
  const int r = t[0], s = t[1], alpha = t[2], beta = t[3];
  RowBuilder row("thm6", label({"r", "s", "alpha", "beta"}, t));
  const Diagram d = k_family(r, s, alpha, beta);
  const int c_l = 2 * r + 2 * s + alpha + beta + 4;
  const Extremes ex = structural(d, row, c_l + r + s + 1, r + s + alpha + r, r + s + beta + s + 1);
  row.check("a_m", Integer(0), ex.coeffs.a_m);
  row.check("a_M", Integer(0), ex.coeffs.a_M);
  row.check("components", 1, link_components(d));
  if (const auto p = full_bracket(d, ctx, row)) {
    const int top = 7 * r + 5 * s + 3 * alpha + beta + 3;
    const int bottom = -5 * r - 7 * s - alpha - 3 * beta - 5;
    row.check("max degree", top, p->max_degree());
    row.check("M-4", ex.degrees.M - 4, p->max_degree());
    row.check("coeff at max", sign_pow(s + alpha - 1) * s, p->coeff(p->max_degree()));
    row.check("min degree", bottom, p->min_degree());
    row.check("m+4", ex.degrees.m + 4, p->min_degree());
    row.check("coeff at min", sign_pow(r + beta) * r, p->coeff(p->min_degree()));
    row.check("span", 12 * (r + s) + 4 * (alpha + beta) + 8, p->span());
  }
  return {row.done()};
}

std::vector<VerifyRow> rows_pretzel(const Tuple& t, const Context& ctx) {
  const int a = t[0], s = t[1];
  std::vector<VerifyRow> rows;
  for (int mask = 0; mask < (1 << s); ++mask) {
    std::vector<int> entries{a};
    int twos = 0;
    for (int i = 0; i < s; ++i) {
      const bool two = (mask >> i) & 1;
      entries.push_back(two ? -2 : -3);
      twos += two;
    }
    if (twos == 0) continue;
    std::string name = "P(";
    for (std::size_t i = 0; i < entries.size(); ++i) name += (i ? "," : "") + std::to_string(entries[i]);
    RowBuilder row("pretzel", name + ")");
    const Diagram d = pretzel(entries);
    if (d.crossing_count() > ctx.enumeration.limit) {
      rows.push_back(row.skip("needs the full bracket; " + std::to_string(d.crossing_count()) + " crossings > limit"));
      continue;
    }
    const ExtremeDegrees ed = extreme_degrees(d);
    const LaurentPoly p = bracket(d, ctx.enumeration);
    row.check("a_M", Integer(0), p.coeff(ed.M));
    row.check("|a_{M-4}|", Integer(twos), Integer(abs(p.coeff(ed.M - 4))));
    row.check("|a_m|", Integer(1), Integer(abs(p.coeff(ed.m))));
    row.note_line("a_{M-4}=" + p.coeff(ed.M - 4).str() + " |s_A|=" + std::to_string(ed.circles_a));
    rows.push_back(row.done());
  }
  return rows;
}

// ---- registry --------------------------------------------------------------

struct TheoremSpec {
  std::string id;
  std::vector<std::string> params;
  std::vector<int> lower;           // implicit start of `name<=b`
  std::vector<int> fill;            // value of a parameter missing from a non-empty grid
  std::vector<Tuple> defaults;      // tuples for an empty grid
  std::function<std::vector<VerifyRow>(const Tuple&, const Context&)> rows;
};

std::vector<Tuple> range_tuples(int lo, int hi) {
  std::vector<Tuple> out;
  for (int v = lo; v <= hi; ++v) out.push_back({v});
  return out;
}

const std::vector<TheoremSpec>& registry() {
  static const std::vector<TheoremSpec> specs = {
      {"paths", {"n"}, {1}, {1}, range_tuples(1, 30), rows_paths},
      {"thm1", {"r"}, {1}, {1}, range_tuples(1, 8), rows_thm1},
      {"fibonacci", {"r"}, {1}, {1}, range_tuples(1, 6), rows_fibonacci},
      {"lemma3", {"k"}, {1}, {1}, range_tuples(1, 3), rows_lemma3},
      {"example", {}, {}, {}, {{}}, rows_example},
      {"primes", {"h"}, {1}, {3}, {{3}}, rows_primes},
      {"thm2", {"r"}, {1}, {1}, range_tuples(1, 2), rows_thm2},
      {"thm3", {"r", "s"}, {1, 1}, {1, 1}, {{1, 1}}, rows_thm3},
      {"thm4", {"r", "s", "alpha"}, {1, 1, 3}, {1, 1, 3}, {{1, 1, 3}}, rows_thm4},
      {"thm5",
       {"r", "s", "alpha", "beta"},
       {2, 2, 2, 2},
       {2, 2, 2, 2},
       {{2, 2, 2, 2}, {2, 3, 2, 2}, {3, 2, 2, 3}},
       rows_thm5},
      {"thm6", {"r", "s", "alpha", "beta"}, {2, 2, 2, 2}, {2, 2, 2, 2}, {{2, 2, 2, 2}, {2, 2, 3, 2}}, rows_thm6},
      {"pretzel", {"a", "s"}, {2, 2}, {2, 2}, {{2, 2}, {2, 3}, {3, 2}, {3, 3}}, rows_pretzel},
  };
  return specs;
}

std::vector<Tuple> expand(const TheoremSpec& spec, const std::vector<std::string>& grid) {
  if (grid.empty()) return spec.defaults;
  std::map<std::string, int> lower;
  for (std::size_t i = 0; i < spec.params.size(); ++i) lower[spec.params[i]] = spec.lower[i];
  const auto values = parse_grid(grid, lower);
  for (const auto& [name, v] : values)
    if (!lower.count(name)) throw UsageError("theorem " + spec.id + " has no parameter '" + name + "'");
  std::vector<Tuple> out{{}};
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    const auto it = values.find(spec.params[i]);
    const std::vector<int> choices = it == values.end() ? std::vector<int>{spec.fill[i]} : it->second;
    std::vector<Tuple> next;
    for (const auto& t : out)
      for (int v : choices) {
        Tuple u = t;
        u.push_back(v);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError("bad integer '" + s + "' in grid");
  return v;
}

const char* status_name(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "PASS";
    case RowStatus::Fail: return "FAIL";
    case RowStatus::Partial: return "PARTIAL";
    case RowStatus::Skip: return "SKIP";
  }
  return "?";
}

}  // namespace

int VerifyReport::count(RowStatus s) const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [s](const VerifyRow& r) { return r.status == s; }));
}

std::vector<std::string> theorem_ids() {
  std::vector<std::string> ids;
  for (const auto& spec : registry()) ids.push_back(spec.id);
  return ids;
}

std::map<std::string, std::vector<int>> parse_grid(const std::vector<std::string>& grid,
                                                   const std::map<std::string, int>& lower_bounds) {
  std::map<std::string, std::vector<int>> out;
  for (const auto& token : grid) {
    std::vector<int> values;
    std::string name;
    if (const auto le = token.find("<="); le != std::string::npos) {
      name = token.substr(0, le);
      const auto it = lower_bounds.find(name);
      if (it == lower_bounds.end()) throw UsageError("unknown grid parameter '" + name + "'");
      const int hi = parse_int(token.substr(le + 2));
      for (int v = it->second; v <= hi; ++v) values.push_back(v);
    } else if (const auto eq = token.find('='); eq != std::string::npos) {
      name = token.substr(0, eq);
      const std::string rhs = token.substr(eq + 1);
      if (const auto dots = rhs.find(".."); dots != std::string::npos) {
        const int lo = parse_int(rhs.substr(0, dots)), hi = parse_int(rhs.substr(dots + 2));
        for (int v = lo; v <= hi; ++v) values.push_back(v);
      } else {
        std::stringstream in(rhs);
        std::string part;
        while (std::getline(in, part, ',')) values.push_back(parse_int(part));
      }
    } else {
      throw UsageError("grid token '" + token + "' is not name=a, name=a..b, name=a,b or name<=b");
    }
    if (name.empty()) throw UsageError("grid token '" + token + "' has no parameter name");
    if (values.empty()) throw UsageError("grid token '" + token + "' selects no values");
    auto& slot = out[name];
    slot.insert(slot.end(), values.begin(), values.end());
  }
  return out;
}

VerifyReport run_verify(const std::string& theorem, const std::vector<std::string>& grid, const RunConfig& cfg) {
  cfg.validate();
  const auto& specs = registry();
  const auto spec = std::find_if(specs.begin(), specs.end(), [&](const TheoremSpec& s) { return s.id == theorem; });
  if (spec == specs.end()) {
    std::string known;
    for (const auto& id : theorem_ids()) known += (known.empty() ? "" : ", ") + id;
    throw UsageError("unknown theorem '" + theorem + "' (known: " + known + ")");
  }
  const std::vector<Tuple> tuples = expand(*spec, grid);

  const int threads = std::max(1, std::min<int>(cfg.workers, static_cast<int>(tuples.size())));
  Context ctx{{cfg.limit, std::max(1, cfg.workers / threads)}};
  std::vector<std::vector<VerifyRow>> results(tuples.size());
  std::vector<std::string> errors(tuples.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tuples.size();) {
      try {
        results[i] = spec->rows(tuples[i], ctx);
      } catch (const std::invalid_argument& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  VerifyReport report{spec->id, {}};
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (!errors[i].empty()) throw UsageError(spec->id + " " + label(spec->params, tuples[i]) + ": " + errors[i]);
    for (auto& row : results[i]) report.rows.push_back(std::move(row));
  }
  return report;
}

std::string render_text(const VerifyReport& report) {
  std::ostringstream out;
  for (const auto& row : report.rows) {
    out << row.theorem << ' ' << row.params << ' ' << status_name(row.status);
    for (const auto& c : row.checks) {
      out << ' ' << c.name << '=' << c.actual;
      if (!c.ok) out << "(expected " << c.expected << ')';
    }
    if (!row.note.empty()) out << " [" << row.note << ']';
    out << '\n';
  }
  out << report.theorem << ": " << report.rows.size() << " rows, " << report.count(RowStatus::Pass) << " pass, "
      << report.count(RowStatus::Fail) << " fail, " << report.count(RowStatus::Partial) << " partial, "
      << report.count(RowStatus::Skip) << " skip\n";
  return out.str();
}

std::string render_json(const VerifyReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : row.checks)
      checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}});
    rows.push_back({{"params", row.params}, {"status", status_name(row.status)}, {"checks", checks}, {"note", row.note}});
  }
  nlohmann::ordered_json doc = {{"theorem", report.theorem},
                                {"rows", rows},
                                {"summary",
                                 {{"pass", report.count(RowStatus::Pass)},
                                  {"fail", report.count(RowStatus::Fail)},
                                  {"partial", report.count(RowStatus::Partial)},
                                  {"skip", report.count(RowStatus::Skip)}}}};
  return doc.dump(2) + "\n";
}

}  // namespace kbracket::cli
