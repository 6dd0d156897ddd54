// Acceptance run: one line per criterion, exit status 0 when every criterion
// passes. With --expect-fail=<ids> the status is 0 exactly when the failing
// set equals <ids>, so known deviations stay visible without hiding new ones.

#include "kbracket/chords.hpp"
#include "kbracket/families.hpp"
#include "kbracket/graphs.hpp"
#include "kbracket_cli/commands.hpp"
#include "kbracket_cli/verify.hpp"

#include "oracle.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace kbracket;

namespace {

int sign_pow(int e) { return e % 2 == 0 ? 1 : -1; }

long long coeff(const oracle::Poly& p, int degree) {
  const auto it = p.find(degree);
  return it == p.end() ? 0 : it->second;
}

// Collects mismatches; the first few are reported on the criterion line.
class Checks {
 public:
  template <class A, class B>
  void equal(const std::string& what, const A& actual, const B& expected) {
    ++count_;
    if (actual == expected) return;
    std::ostringstream o;
    o << what << " = " << actual << " (expected " << expected << ")";
    failures_.push_back(o.str());
  }
  void truth(const std::string& what, bool ok) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  int count() const { return count_; }
  std::string summary() const {
    std::string out;
    for (std::size_t i = 0; i < failures_.size() && i < 4; ++i) out += (i ? "; " : "") + failures_[i];
    if (failures_.size() > 4) out += "; +" + std::to_string(failures_.size() - 4) + " more";
    return out;
  }

 private:
  int count_ = 0;
  std::vector<std::string> failures_;
};

struct Criterion {
  int id;
  std::string title;
  double seconds_limit;  // 0: no time bound
  std::function<void(Checks&)> body;
};

void c1_f_ground_truth(Checks& c) {
  c.equal("f(L_1)", f_reduced(path(1)), 0);
  c.equal("f(L_2)", f_reduced(path(2)), -1);
  c.equal("f(L_3)", f_reduced(path(3)), -1);
  c.equal("f(L_4)", f_reduced(path(4)), 1);
  c.equal("f(C_6)", f_reduced(cycle(6)), 2);
  for (int n = 4; n <= 30; ++n)
    c.equal("f(L_" + std::to_string(n) + ") + f(L_" + std::to_string(n - 3) + ")",
            f_reduced(path(n)) + f_reduced(path(n - 3)), 0);
  for (int n = 3; n <= 30; ++n) {
    const Integer tail = n == 3 ? Integer(1) : f_reduced(path(n - 3));
    c.equal("f(C_" + std::to_string(n) + ")", f_reduced(cycle(n)), f_reduced(path(n - 1)) - tail);
  }
}

void c2_oracle_equivalence(Checks& c) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> size(0, 18);
  std::uniform_real_distribution<double> density(0.05, 0.6);
  for (int i = 0; i < 200; ++i) {
    const Graph g = oracle::random_graph(rng, size(rng), density(rng));
    c.equal("graph " + std::to_string(i), f_reduced(g), f_naive(g));
  }
}

void c3_hexagon_chains(Checks& c) {
  for (int r = 1; r <= 8; ++r) {
    const RootedGraph g = family_G(r);
    c.equal("f(G_" + std::to_string(r) + ")", f_reduced(g.graph), r + 1);
    c.equal("f(-G_" + std::to_string(r) + ")", f_reduced(negate(g)), -(r + 1));
  }
}

void verify_all_pass(Checks& c, const std::string& id, const std::vector<std::string>& grid) {
  const cli::VerifyReport report = cli::run_verify(id, grid, cli::RunConfig{});
  c.truth(id + " produced rows", !report.rows.empty());
  for (const auto& row : report.rows) c.truth(id + " " + row.params, row.status == cli::RowStatus::Pass);
}

void c4_buildings(Checks& c) { verify_all_pass(c, "lemma3", {"k<=3"}); }

void c5_example(Checks& c) {
  const auto brick = brick_search(5, 3, 8);
  c.truth("brick of type (5,3) found", brick.has_value());
  if (!brick) return;
  c.equal("type of searched brick", brick_type(*brick).n, 5);
  c.equal("f(S(B, B, H))", f_reduced(building_simple({*brick, *brick, hexagon()}).graph), 41);
  verify_all_pass(c, "example", {});
}

void c6_fibonacci(Checks& c) {
  const int expected[] = {2, 3, 5, 8, 13, 21};
  for (int r = 1; r <= 6; ++r) c.equal("f(F_" + std::to_string(r) + ")", f_reduced(family_F(r).graph), expected[r - 1]);
}

void c7_bracket_properties(Checks& c) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> size(1, 14), circles(1, 4);
  for (int i = 0; i < 100; ++i) {
    const Diagram d = to_diagram(random_planar_chord_diagram(rng, size(rng), circles(rng)));
    const std::string tag = "diagram " + std::to_string(i) + ": ";
    const int n = d.crossing_count();
    const oracle::Poly p = oracle::bracket(d);
    const ExtremeDegrees ed = extreme_degrees(d);
    c.truth(tag + "engine equals brute force", oracle::as_map(bracket(d)) == p);
    for (const auto& [deg, x] : p) {
      c.truth(tag + "degree " + std::to_string(deg) + " congruent to M mod 4", ((deg - ed.M) % 4 + 4) % 4 == 0);
      c.truth(tag + "degree " + std::to_string(deg) + " within [m, M]", ed.m <= deg && deg <= ed.M);
    }
    oracle::Poly substituted;
    for (const auto& [deg, x] : p) substituted[-deg] = x;
    c.truth(tag + "mirror substitution", oracle::bracket(mirror(d)) == substituted);
    const std::uint64_t states = std::uint64_t{1} << n;
    const std::uint64_t stride = n <= 10 ? 1 : states / 256;
    for (std::uint64_t mask = 0; mask < states; mask += stride) {
      const int base = oracle::circles(d, mask);
      for (int j = 0; j < n; ++j)
        c.truth(tag + "one flip changes |s| by 1", std::abs(oracle::circles(d, mask ^ (std::uint64_t{1} << j)) - base) == 1);
    }
    const ExtremeCoeffs ec = extreme_coeffs(d);
    const SecondCoeffs sc = second_coeffs(d);
    c.equal(tag + "a_M", ec.a_M, coeff(p, ed.M));
    c.equal(tag + "a_m", ec.a_m, coeff(p, ed.m));
    c.equal(tag + "a_{M-4}", sc.a_M_minus_4, coeff(p, ed.M - 4));
    c.equal(tag + "a_{m+4}", sc.a_m_plus_4, coeff(p, ed.m + 4));
    c.equal(tag + "a_M by Lando graph", Integer(sign_pow(ed.circles_a - 1) * oracle::f(lando_graph(a_state_chords(d)))),
            coeff(p, ed.M));
  }
}

void c8_resmooth(Checks& c) {
  std::mt19937_64 rng(88);
  std::uniform_int_distribution<int> size(0, 12), circles(1, 4);
  for (int i = 0; i < 50; ++i) {
    const ChordDiagram cd = random_chord_diagram(rng, size(rng), circles(rng));
    const Diagram d = to_diagram(cd);
    const int k = cd.chord_count();
    int mismatches = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<int> subset;
      for (int j = 0; j < k; ++j)
        if (mask >> j & 1) subset.push_back(j);
      mismatches += resmooth_count(cd, subset) != oracle::circles(d, mask);
    }
    c.equal("chord diagram " + std::to_string(i) + " mismatching subsets", mismatches, 0);
  }
}

void c9_d_family(Checks& c) {
  const Diagram d1 = d_family(1);
  const oracle::Poly p = oracle::bracket(d1);
  c.equal("c(D_1)", d1.crossing_count(), 12);
  c.equal("lowest degree", p.begin()->first, -28);
  c.equal("a_m", p.begin()->second, 1);
  c.equal("highest degree", p.rbegin()->first, 12);
  c.equal("a_M", p.rbegin()->second, 2);
  c.equal("span", p.rbegin()->first - p.begin()->first, 40);
  const Diagram d2 = d_family(2);
  const ExtremeDegrees ed = extreme_degrees(d2);
  const ExtremeCoeffs ec = extreme_coeffs(d2);
  c.equal("c(D_2)", d2.crossing_count(), 24);
  c.equal("|s_A D_2|", ed.circles_a, 1);
  c.equal("|s_B D_2|", ed.circles_b, 15);
  c.equal("a_M(D_2)", ec.a_M, 3);
  c.equal("a_m(D_2)", ec.a_m, 1);
  c.equal("m(D_2)", ed.m, -52);
  c.equal("M(D_2)", ed.M, 24);
}

void c10_joined_families(Checks& c) {
  const Diagram d = d_rs(1, 1);
  const ExtremeDegrees ed = extreme_degrees(d);
  const ExtremeCoeffs ec = extreme_coeffs(d);
  c.equal("c(D_11)", d.crossing_count(), 26);
  c.equal("a_m(D_11)", ec.a_m, 2);
  c.equal("a_M(D_11)", ec.a_M, 2);
  c.equal("m(D_11)", ed.m, -42);
  c.equal("M(D_11)", ed.M, 42);
  c.equal("components(D_11)", link_components(d), 1);
  const Diagram e = d_rs_alpha(1, 1, 3);
  const ExtremeDegrees ee = extreme_degrees(e);
  const ExtremeCoeffs ce = extreme_coeffs(e);
  c.equal("c(D_11^3)", e.crossing_count(), 29);
  c.equal("a_m(D_11^3)", ce.a_m, -2);
  c.equal("a_M(D_11^3)", ce.a_M, 2);
  c.equal("m(D_11^3)", ee.m, -47);
  c.equal("M(D_11^3)", ee.M, 49);
  c.equal("components(D_11^3)", link_components(e), 1);
}

void c11_l_family(Checks& c) {
  for (const auto& [r, s, alpha, beta] : std::vector<std::array<int, 4>>{{2, 2, 2, 2}, {2, 3, 2, 2}, {3, 2, 2, 3}}) {
    const Diagram d = l_family(r, s, alpha, beta);
    const std::string tag = "L(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(alpha) + "," +
                            std::to_string(beta) + ") ";
    const ExtremeDegrees ed = extreme_degrees(d);
    const LaurentPoly p = bracket(d, {24, 2});
    const SpanInfo span = span_min_max(p);
    c.equal(tag + "a_M", p.coeff(ed.M), 0);
    c.equal(tag + "a_m", p.coeff(ed.m), 0);
    const int top = 4 * r + 4 * s + 3 * alpha + beta - 2, bottom = -4 * r - 4 * s - alpha - 3 * beta + 2;
    c.equal(tag + "M-4", ed.M - 4, top);
    c.equal(tag + "m+4", ed.m + 4, bottom);
    c.equal(tag + "highest degree", span.max_degree, top);
    c.equal(tag + "lowest degree", span.min_degree, bottom);
    c.equal(tag + "a_{M-4}", p.coeff(top), sign_pow(r + s + alpha - 1) * s);
    c.equal(tag + "a_{m+4}", p.coeff(bottom), sign_pow(r + s + beta - 1) * r);
    c.equal(tag + "span", span.span, 8 * (r + s) + 4 * (alpha + beta) - 4);
    c.equal(tag + "components", link_components(d), r + s + 2 - alpha % 2 - beta % 2);
  }
}

void c12_k_family(Checks& c) {
  for (const auto& [r, s, alpha, beta] : std::vector<std::array<int, 4>>{{2, 2, 2, 2}, {2, 2, 3, 2}}) {
    const Diagram d = k_family(r, s, alpha, beta);
    const std::string tag = "K(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(alpha) + "," +
                            std::to_string(beta) + ") ";
    const ExtremeDegrees ed = extreme_degrees(d);
    const LaurentPoly p = bracket(d, {24, 2});
    const SpanInfo span = span_min_max(p);
    c.equal(tag + "a_M", p.coeff(ed.M), 0);
    c.equal(tag + "a_m", p.coeff(ed.m), 0);
    const int top = 7 * r + 5 * s + 3 * alpha + beta + 3, bottom = -5 * r - 7 * s - alpha - 3 * beta - 5;
    c.equal(tag + "highest degree", span.max_degree, top);
    c.equal(tag + "coefficient at highest degree", p.coeff(span.max_degree), sign_pow(s + alpha - 1) * s);
    c.equal(tag + "lowest degree", span.min_degree, bottom);
    c.equal(tag + "coefficient at lowest degree", p.coeff(span.min_degree), sign_pow(r + beta) * r);
    c.equal(tag + "span", span.span, 12 * (r + s) + 4 * (alpha + beta) + 8);
    c.equal(tag + "components", link_components(d), 1);
  }
}

void c13_pretzel(Checks& c) {
  for (int a : {2, 3})
    for (int s : {2, 3})
      for (int mask = 0; mask < (1 << s); ++mask) {
        std::vector<int> entries{a};
        long long twos = 0;
        for (int i = 0; i < s; ++i) {
          entries.push_back(mask >> i & 1 ? -2 : -3);
          twos += mask >> i & 1;
        }
        if (twos == 0) continue;
        const Diagram d = pretzel(entries);
        const ExtremeDegrees ed = extreme_degrees(d);
        const oracle::Poly p = oracle::bracket(d);
        std::string tag = "P(";
        for (std::size_t i = 0; i < entries.size(); ++i) tag += (i ? "," : "") + std::to_string(entries[i]);
        tag += ") ";
        c.equal(tag + "a_M", coeff(p, ed.M), 0);
        c.equal(tag + "|a_{M-4}|", std::llabs(coeff(p, ed.M - 4)), twos);
      }
}

void c14_round_trip(Checks& c) {
  std::mt19937_64 rng(144);
  std::uniform_int_distribution<int> size(0, 10), circles(1, 4);
  for (int i = 0; i < 100; ++i) {
    const ChordDiagram cd = random_chord_diagram(rng, size(rng), circles(rng));
    c.truth("chord diagram " + std::to_string(i), isomorphic(a_state_chords(to_diagram(cd)), cd));
  }
}

void c15_determinism(Checks& c) {
  for (const std::string id : {"paths", "thm1", "fibonacci", "lemma3", "thm2", "thm5", "pretzel"}) {
    cli::RunConfig one, many;
    many.workers = 4;
    std::ostringstream a, b;
    cli::cmd_verify(id, {}, one, a);
    cli::cmd_verify(id, {}, many, b);
    c.truth(id + " report identical for 1 and 4 workers", a.str() == b.str());
  }
}

std::set<int> parse_ids(const std::string& text) {
  std::set<int> ids;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) ids.insert(std::stoi(item));
  return ids;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected_failures;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    const std::string flag = "--expect-fail=";
    if (arg.rfind(flag, 0) == 0) {
      expected_failures = parse_ids(arg.substr(flag.size()));
    } else {
      std::cerr << "usage: acceptance [--expect-fail=<id,id,...>]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "f ground truth on paths and cycles, exact", 1, c1_f_ground_truth},
      {2, "f_naive = f_reduced on 200 random graphs (<= 18 vertices), exact", 30, c2_oracle_equivalence},
      {3, "f(G_r) = r+1 and f(-G_r) = -(r+1), r = 1..8, exact", 5, c3_hexagon_chains},
      {4, "building brick types vs f_naive, k <= 3, exact", 0, c4_buildings},
      {5, "f(S(B53, B53, H)) = 41 with searched brick, exact", 0, c5_example},
      {6, "f(F_r) Fibonacci values, r = 1..6, exact", 0, c6_fibonacci},
      {7, "bracket engine properties on 100 random diagrams (<= 14 crossings), exact", 120, c7_bracket_properties},
      {8, "resmooth_count vs diagram circles, 50 chord diagrams, all subsets, exact", 0, c8_resmooth},
      {9, "D_1 full bracket and D_2 structure, exact", 0, c9_d_family},
      {10, "D_11 and D_11^3 extremes via Lando route, exact", 0, c10_joined_families},
      {11, "L family second coefficients by full state sum, exact", 60, c11_l_family},
      {12, "K family stated degrees and coefficients by full state sum, exact", 60, c12_k_family},
      {13, "pretzel a_M = 0 and |a_{M-4}| = #(-2) by brute force, exact", 0, c13_pretzel},
      {14, "a_state_chords(to_diagram(cd)) isomorphic to cd, 100 diagrams, exact", 0, c14_round_trip},
      {15, "verify reports byte-identical for 1 and 4 workers", 0, c15_determinism},
  };

  std::set<int> failed;
  for (const Criterion& k : criteria) {
    Checks checks;
    const auto start = std::chrono::steady_clock::now();
    try {
      k.body(checks);
    } catch (const std::exception& e) {
      checks.truth(std::string("exception: ") + e.what(), false);
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = k.seconds_limit == 0 || seconds <= k.seconds_limit;
    const bool ok = checks.ok() && in_time;
    if (!ok) failed.insert(k.id);
    char timing[64];
    if (k.seconds_limit > 0)
      std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", seconds, k.seconds_limit);
    else
      std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    std::cout << (ok ? "PASS" : "FAIL") << " [" << (k.id < 10 ? " " : "") << k.id << "] " << k.title << " ("
              << checks.count() << " checks, " << timing << ")";
    if (!checks.ok()) std::cout << ": " << checks.summary();
    if (!in_time) std::cout << ": over time limit";
    std::cout << std::endl;
  }

  std::cout << criteria.size() - failed.size() << "/" << criteria.size() << " criteria pass" << std::endl;
  if (argc > 1) {
    if (failed == expected_failures) return 0;
    std::cout << "failing set differs from --expect-fail" << std::endl;
    return 1;
  }
  return failed.empty() ? 0 : 1;
}
