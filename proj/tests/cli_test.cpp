#include "kbracket/io.hpp"
#include "kbracket_cli/commands.hpp"
#include "kbracket_cli/verify.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

using namespace kbracket;
using namespace kbracket::cli;

namespace {

std::string data(const std::string& name) {
  std::ifstream in(std::string(KBRACKET_TEST_DATA) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Outcome {
  int code;
  std::string out;
};

template <class F>
Outcome run(F f) {
  std::ostringstream out;
  const int code = f(out);
  return {code, out.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

std::string generated(const std::string& kind, const std::string& family, const std::vector<int>& params) {
  return run([&](std::ostream& o) { return cmd_generate(kind, family, params, {}, o); }).out;
}

}  // namespace

TEST(Cli, BracketGoldenLines) {
  const Outcome t = run([](std::ostream& o) { return cmd_bracket(data("trefoil.json"), {}, o); });
  EXPECT_EQ(t.code, kExitOk);
  EXPECT_EQ(t.out, "-1*A^5 + -1*A^-3 + 1*A^-7, span=12, m=-7, M=5\n");
  const Outcome u = run([](std::ostream& o) { return cmd_bracket(data("unknot.json"), {}, o); });
  EXPECT_EQ(u.out, "1, span=0\n");
}

TEST(Cli, BracketJsonRoundTrips) {
  RunConfig cfg;
  cfg.format = Format::Json;
  const Outcome t = run([&](std::ostream& o) { return cmd_bracket(data("trefoil.json"), cfg, o); });
  const auto doc = nlohmann::json::parse(t.out);
  EXPECT_EQ(laurent_from_json(doc["bracket"].dump()), bracket(diagram_from_json(data("trefoil.json"))));
  EXPECT_EQ(doc["span"], 12);
  EXPECT_EQ(doc["m_attained"], true);
}

TEST(Cli, OversizedDiagramNamesTheLimitFlag) {
  std::ostringstream out;
  try {
    cmd_bracket(data("torus_2_25.json"), {}, out);
    FAIL() << "expected a size error";
  } catch (const EnumerationLimitError& e) {
    EXPECT_NE(std::string(e.what()).find("--limit"), std::string::npos);
  }
}

TEST(Cli, ConfigValidation) {
  RunConfig cfg;
  cfg.limit = 31;
  EXPECT_THROW(cfg.validate(), UsageError);
  cfg.limit = 24;
  cfg.workers = 0;
  EXPECT_THROW(cfg.validate(), UsageError);
}

TEST(Cli, ParseErrors) {
  std::ostringstream out;
  EXPECT_THROW(cmd_bracket("{bad", {}, out), ParseError);
  EXPECT_THROW(cmd_graph_f("0 x\n", {}, out), ParseError);
  EXPECT_THROW(cmd_generate("diagram", "nope", {}, {}, out), UsageError);
  EXPECT_THROW(cmd_generate("graph", "G", {0}, {}, out), UsageError);
  EXPECT_THROW(cmd_generate("shape", "G", {1}, {}, out), UsageError);
  EXPECT_THROW(cmd_verify("nope", {}, {}, out), UsageError);
}

TEST(Cli, AnalyzeTrefoil) {
  const Outcome t = run([](std::ostream& o) { return cmd_analyze(data("trefoil.json"), {}, o); });
  EXPECT_EQ(t.code, kExitOk);
  EXPECT_TRUE(has_line(t.out, "a_M: -1"));
  EXPECT_TRUE(has_line(t.out, "A-Lando graph: 0 vertices, edges (none)"));
  EXPECT_TRUE(has_line(t.out, "f(A-Lando): 1"));
  EXPECT_TRUE(has_line(t.out, "a_M = (-1)^(|s_A|-1) f(A-Lando): holds"));
}

TEST(Cli, AnalyzePretzelAndD1) {
  const Outcome p = run([](std::ostream& o) { return cmd_analyze(generated("diagram", "pretzel", {2, -2, -2}), {}, o); });
  EXPECT_EQ(p.code, kExitOk);
  EXPECT_TRUE(has_line(p.out, "a_M: 0"));
  EXPECT_TRUE(has_line(p.out, "A-Lando graph: 2 vertices, edges (none)"));
  EXPECT_TRUE(has_line(p.out, "f(A-Lando): 0"));
  const Outcome d = run([](std::ostream& o) { return cmd_analyze(generated("diagram", "D", {1}), {}, o); });
  EXPECT_EQ(d.code, kExitOk);
  EXPECT_TRUE(has_line(d.out, "a_M: 2"));
  EXPECT_TRUE(has_line(d.out, "f(A-Lando): 2"));
}

TEST(Cli, GraphF) {
  auto f = [](const std::string& text) {
    return run([&](std::ostream& o) { return cmd_graph_f(text, {}, o); }).out;
  };
  EXPECT_EQ(f(data("hexagon.txt")), "2\n");
  EXPECT_EQ(f(data("path2.txt")), "-1\n");
  EXPECT_EQ(f(data("empty.txt")), "1\n");
  EXPECT_EQ(f(R"({"vertices": 6, "edges": [[0,1],[1,2],[2,3],[3,4],[4,5],[5,0]]})"), "2\n");
}

TEST(Cli, GenerateFamilies) {
  EXPECT_EQ(f_reduced(parse_graph(generated("graph", "G", {3}))), 4);
  EXPECT_EQ(f_reduced(parse_graph(generated("graph", "F", {5}))), 13);
  const Diagram k = diagram_from_json(generated("diagram", "K", {2, 2, 2, 2}));
  const Diagram l = diagram_from_json(generated("diagram", "L", {2, 2, 2, 2}));
  EXPECT_EQ(k.crossing_count(), 21);
  EXPECT_EQ(k.crossing_count(), l.crossing_count() + 2 + 2 + 1);
  EXPECT_EQ(diagram_from_json(generated("diagram", "Drs", {1, 1})).crossing_count(), 26);
  EXPECT_EQ(diagram_from_json(generated("diagram", "Drsa", {1, 1, 3})).crossing_count(), 29);
  EXPECT_THROW(generated("diagram", "Drsa", {1, 1, 2}), UsageError);
}

TEST(Cli, RealizeProducesMatchingLandoGraph) {
  const Graph g = family_G(2).graph;
  const Outcome r = run([&](std::ostream& o) { return cmd_realize(to_edge_list(g), {}, o); });
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(isomorphic(lando_graph(chord_diagram_from_json(r.out)), g));
}

TEST(Cli, VerifyExamples) {
  RunConfig cfg;
  cfg.workers = 2;
  const VerifyReport thm2 = run_verify("thm2", {"r=1..2"}, cfg);
  ASSERT_EQ(thm2.rows.size(), 2u);
  EXPECT_EQ(thm2.count(RowStatus::Pass), 2);
  const VerifyReport lemma3 = run_verify("lemma3", {"k<=3"}, cfg);
  EXPECT_EQ(lemma3.count(RowStatus::Pass), static_cast<int>(lemma3.rows.size()));
  const VerifyReport pretzel = run_verify("pretzel", {"s<=4"}, cfg);
  EXPECT_EQ(pretzel.count(RowStatus::Pass), static_cast<int>(pretzel.rows.size()));
}

TEST(Cli, VerifyPartialRowsDoNotFail) {
  std::ostringstream out;
  EXPECT_EQ(cmd_verify("thm3", {}, {}, out), kExitOk);
  EXPECT_NE(out.str().find("PARTIAL"), std::string::npos);
}

TEST(Cli, VerifyExitCodeReportsFailures) {
  std::ostringstream out;
  EXPECT_EQ(cmd_verify("paths", {"n=4"}, {}, out), kExitFailure);
  EXPECT_EQ(cmd_verify("paths", {"n=5..6"}, {}, out), kExitOk);
}

TEST(Cli, VerifyIsIndependentOfWorkerCount) {
  RunConfig one, many;
  many.workers = 4;
  for (const std::string id : {"thm1", "lemma3", "thm5"}) {
    std::ostringstream a, b;
    cmd_verify(id, {}, one, a);
    cmd_verify(id, {}, many, b);
    EXPECT_EQ(a.str(), b.str()) << id;
  }
}
