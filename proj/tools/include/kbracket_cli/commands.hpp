#pragma once

#include "kbracket/diagram.hpp"
#include "kbracket/graphs.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace kbracket::cli {

enum class Format { Text, Json };

struct RunConfig {
  int limit = kDefaultEnumerationLimit;
  int workers = 1;
  Format format = Format::Text;
  std::uint64_t seed = 1;

  EnumerationConfig enumeration() const { return {limit, workers}; }
  /// Throws UsageError unless limit <= 30 and workers >= 1.
  void validate() const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every command reads its input as text and writes its report to `out`.
/// Bad input raises ParseError, UsageError or EnumerationLimitError; the
/// return value is the process exit code otherwise.
int cmd_bracket(const std::string& diagram_json, const RunConfig& cfg, std::ostream& out);
int cmd_analyze(const std::string& diagram_json, const RunConfig& cfg, std::ostream& out);
/// Accepts the edge-list format or graph JSON (detected by a leading `{`).
int cmd_graph_f(const std::string& graph_text, const RunConfig& cfg, std::ostream& out);
/// kind is `graph` or `diagram`.
int cmd_generate(const std::string& kind, const std::string& family, const std::vector<int>& params,
                 const RunConfig& cfg, std::ostream& out);
int cmd_realize(const std::string& graph_text, const RunConfig& cfg, std::ostream& out);
int cmd_verify(const std::string& theorem, const std::vector<std::string>& grid, const RunConfig& cfg,
               std::ostream& out);

/// Graph from either accepted text format.
Graph parse_graph(const std::string& text);

}  // namespace kbracket::cli
