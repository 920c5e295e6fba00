#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "tmatch/error.hpp"

namespace tmatch::detail {

/// A non-blank, non-comment input line with its 1-based line number.
struct SourceLine {
  std::size_t number;
  std::string text;
};

inline std::vector<SourceLine> content_lines(std::istream& in) {
  std::vector<SourceLine> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos || raw[first] == '#') continue;
    lines.push_back({number, raw});
  }
  return lines;
}

/// Cursor over one line. Errors report the column of the offending token.
class LineCursor {
 public:
  explicit LineCursor(const SourceLine& line) : line_(line) {}

  void skip_space() {
    while (pos_ < text().size() && (text()[pos_] == ' ' || text()[pos_] == '\t')) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text().size();
  }

  char peek() {
    skip_space();
    return pos_ < text().size() ? text()[pos_] : '\0';
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text().size() || text()[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::string_view word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text().size() && !std::isspace(static_cast<unsigned char>(text()[pos_])) &&
           text()[pos_] != '(' && text()[pos_] != ')' && text()[pos_] != ',') {
      ++pos_;
    }
    if (start == pos_) fail("expected a token");
    return std::string_view(text()).substr(start, pos_ - start);
  }

  std::int64_t integer(std::string_view what) {
    skip_space();
    std::size_t start = pos_;
    auto token = word();
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      pos_ = start;
      fail("expected integer " + std::string(what));
    }
    return value;
  }

  double real(std::string_view what) {
    skip_space();
    std::size_t start = pos_;
    auto token = word();
    double value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value)) {
      pos_ = start;
      fail("expected finite number " + std::string(what));
    }
    return value;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorKind::Syntax, message, line_.number, pos_ + 1);
  }

  std::size_t line_number() const { return line_.number; }
  std::size_t column() const { return pos_ + 1; }

 private:
  const std::string& text() const { return line_.text; }

  const SourceLine& line_;
  std::size_t pos_ = 0;
};

/// The value half of a key=value token, with its source position.
struct FieldValue {
  std::string text;
  std::size_t line;
  std::size_t column;

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorKind::Syntax, message, line, column);
  }

  std::uint64_t unsigned_integer() const {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) fail("expected unsigned integer");
    return value;
  }

  double real() const {
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
      fail("expected finite number");
    }
    return value;
  }
};

/// Shortest decimal text that parses back to the same double.
inline std::string format_real(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

}  // namespace tmatch::detail
