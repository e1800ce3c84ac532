#ifndef FLAGDESCENT_CLI_HPP
#define FLAGDESCENT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "flagdescent/root_system.hpp"

namespace flagdescent::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kResourceBound = 2, kSelfTestFailed = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "1,2,3" -> (1,2,3).
IntVector parse_int_list(const std::string& text);

/// "a1+2a3" -> (1,0,2); "-a2" -> (0,-1,0). Throws Error on malformed input.
RootCoords parse_root_term(const RootSystem& rs, const std::string& text);

/// Comma-separated root terms.
std::vector<RootCoords> parse_root_list(const RootSystem& rs, const std::string& text);

/// Aligned text rendering of the theta/d table for the given types.
std::string theta_table_text(const std::vector<std::string>& types);

}  // namespace flagdescent::cli

namespace flagdescent {

struct SelfTestCase {
  std::string name;
  bool passed;
  std::string detail;
};

/// Reproduces the worked examples; deterministic.
std::vector<SelfTestCase> run_selftest();

}  // namespace flagdescent

#endif  // FLAGDESCENT_CLI_HPP
