#pragma once

#include <charconv>
#include <istream>
#include <string>

#include "biased/parse_error.hpp"

namespace biased::detail {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::string next(const char* expecting) {
    std::string line;
    if (!std::getline(in_, line)) throw ParseError(line_ + 1, std::string("unexpected end of file, expected ") + expecting);
    ++line_;
    return line;
  }
  int line() const { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;
};

inline int parse_int(const std::string& s, int line) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end || s.empty()) throw ParseError(line, "expected an integer, got '" + s + "'");
  return value;
}

inline int keyed_int(LineReader& r, const std::string& key) {
  const std::string line = r.next(key.c_str());
  if (line.rfind(key + " ", 0) != 0) throw ParseError(r.line(), "expected '" + key + " <int>'");
  return parse_int(line.substr(key.size() + 1), r.line());
}

}  // namespace biased::detail
