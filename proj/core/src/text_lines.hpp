#pragma once

// Line-oriented tokenizer shared by the text file readers.

#include <charconv>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pursuit/errors.hpp"

namespace pursuit::detail {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next non-blank line split on whitespace, with `#` comments stripped.
  std::optional<std::vector<std::string>> next_fields() {
    std::string text;
    while (std::getline(in_, text)) {
      ++line_;
      if (auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);
      std::istringstream words(text);
      std::vector<std::string> fields;
      for (std::string w; words >> w;) fields.push_back(std::move(w));
      if (!fields.empty()) return fields;
    }
    return std::nullopt;
  }

  int line() const noexcept { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;
};

inline long long to_ll(const std::string& s, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError("expected integer, got `" + s + "`", line);
  return value;
}

inline int to_int(const std::string& s, int line) {
  long long v = to_ll(s, line);
  if (v < -2147483647LL || v > 2147483647LL) throw ParseError("integer out of range `" + s + "`", line);
  return static_cast<int>(v);
}

inline double to_double(const std::string& s, int line) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError("expected number, got `" + s + "`", line);
  }
  if (used != s.size()) throw ParseError("expected number, got `" + s + "`", line);
  return value;
}

}  // namespace pursuit::detail
