#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace pursuit::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kTimeout = 2, kRuleViolation = 3, kStrategyFault = 4 };

/// `name:key=value,key=value`
struct StrategySpec {
  std::string name;
  std::map<std::string, std::string> params;
};
StrategySpec parse_strategy_spec(const std::string& text);

/// Runs one command. `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pursuit::cli
