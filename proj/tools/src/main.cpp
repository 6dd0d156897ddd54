#include "kbracket/io.hpp"
#include "kbracket_cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace kbracket;
using namespace kbracket::cli;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kauffman bracket toolkit: state sums, extreme coefficients, Lando graphs and generators"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "text";
  std::string output;
  app.add_option("--limit", cfg.limit, "Largest crossing count for full state enumeration")->capture_default_str();
  app.add_option("--workers", cfg.workers, "Worker threads")->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for random corpora")->capture_default_str();
  app.add_option("--output", output, "Write the report to this file instead of stdout");

  std::string input;
  auto* bracket_cmd = app.add_subcommand("bracket", "Full Kauffman bracket of a diagram file");
  bracket_cmd->add_option("diagram", input, "Diagram JSON file, - for stdin")->required();
  auto* analyze_cmd = app.add_subcommand("analyze", "Extreme states, Lando graphs and coefficient identities");
  analyze_cmd->add_option("diagram", input, "Diagram JSON file, - for stdin")->required();
  auto* graph_f_cmd = app.add_subcommand("graph-f", "Signed independent-set count f of a graph file");
  graph_f_cmd->add_option("graph", input, "Edge list or graph JSON file, - for stdin")->required();
  auto* realize_cmd = app.add_subcommand("realize", "One-circle chord diagram realizing a graph");
  realize_cmd->add_option("graph", input, "Edge list or graph JSON file, - for stdin")->required();

  std::string kind, family;
  std::vector<int> params;
  auto* generate_cmd = app.add_subcommand("generate", "Write a family member as graph or diagram");
  generate_cmd->add_option("kind", kind, "graph or diagram")->required();
  generate_cmd->add_option("family", family, "Family name")->required();
  generate_cmd->add_option("params", params, "Integer parameters");

  std::string theorem;
  std::vector<std::string> grid;
  auto* verify_cmd = app.add_subcommand("verify", "Recompute theorem claims over a parameter grid");
  verify_cmd->add_option("theorem", theorem, "Theorem id")->required();
  verify_cmd->add_option("grid", grid, "Grid tokens such as r=1..2, s<=3, alpha=2,3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  cfg.format = format == "json" ? Format::Json : Format::Text;
  std::ostringstream report;
  int code = kExitOk;
  try {
    cfg.validate();
    if (*bracket_cmd) code = cmd_bracket(read_input(input), cfg, report);
    else if (*analyze_cmd) code = cmd_analyze(read_input(input), cfg, report);
    else if (*graph_f_cmd) code = cmd_graph_f(read_input(input), cfg, report);
    else if (*realize_cmd) code = cmd_realize(read_input(input), cfg, report);
    else if (*generate_cmd) code = cmd_generate(kind, family, params, cfg, report);
    else if (*verify_cmd) code = cmd_verify(theorem, grid, cfg, report);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EnumerationLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (output.empty()) {
    std::cout << report.str();
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "cannot write '" << output << "'\n";
      return kExitUsage;
    }
    out << report.str();
  }
  return code;
}
