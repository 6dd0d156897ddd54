#pragma once

#include "kbracket_cli/commands.hpp"

#include <map>
#include <string>
#include <vector>

namespace kbracket::cli {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = true;
};

enum class RowStatus { Pass, Fail, Partial, Skip };

/// One parameter tuple of one theorem. Partial rows passed every check they
/// ran but replaced the full bracket by the Gamma / Lando route.
struct VerifyRow {
  std::string theorem;
  std::string params;
  RowStatus status = RowStatus::Pass;
  std::vector<Check> checks;
  std::string note;
};

struct VerifyReport {
  std::string theorem;
  std::vector<VerifyRow> rows;
  int count(RowStatus s) const;
};

/// Identifiers accepted by run_verify, in listing order.
std::vector<std::string> theorem_ids();

/// Grid tokens: `name=a`, `name=a..b`, `name=a,b,c`, `name<=b`. Missing
/// names take the theorem's defaults. Throws UsageError on unknown theorems,
/// parameters or malformed tokens.
VerifyReport run_verify(const std::string& theorem, const std::vector<std::string>& grid, const RunConfig& cfg);

std::string render_text(const VerifyReport& report);
std::string render_json(const VerifyReport& report);

/// Parses grid tokens into name -> values.
std::map<std::string, std::vector<int>> parse_grid(const std::vector<std::string>& grid,
                                                   const std::map<std::string, int>& lower_bounds);

}  // namespace kbracket::cli
