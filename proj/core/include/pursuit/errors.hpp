#pragma once

#include <stdexcept>
#include <string>

namespace pursuit {

/// Malformed input file. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A caller broke an operation's documented precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A computation would exceed its configured memory/state budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No path exists between the requested endpoints.
class NoPathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A lift or traversal reached the unmaterialized edge of a cover window.
class WindowExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructive strategy found one of its invariants broken. This is a bug
/// in the strategy (or its inputs), never a legitimate game outcome.
class StrategyFault : public std::runtime_error {
 public:
  StrategyFault(const std::string& msg, std::string dump = {})
      : std::runtime_error(msg), dump_(std::move(dump)) {}
  const std::string& dump() const noexcept { return dump_; }

 private:
  std::string dump_;
};

}  // namespace pursuit
