#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tmatch {

enum class ErrorKind {
  Syntax,
  SelfLoop,
  VertexOutOfRange,
  EmptyInterval,
  IntervalOutOfRange,
  OverlappingIntervals,
  TooManyIntervals,
  MissingIntervals,
  DuplicatePair,
  NegativeWeight,
  UnknownEdge,
  NotIndependent,
  InvalidMatching,
  InvalidDecomposition,
  MismatchedInputs,
  SizeLimit,
  InfeasibleSpec,
  InvalidArgument,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::SelfLoop: return "self-loop";
    case ErrorKind::VertexOutOfRange: return "vertex-out-of-range";
    case ErrorKind::EmptyInterval: return "empty-interval";
    case ErrorKind::IntervalOutOfRange: return "interval-out-of-range";
    case ErrorKind::OverlappingIntervals: return "overlapping-intervals";
    case ErrorKind::TooManyIntervals: return "too-many-intervals";
    case ErrorKind::MissingIntervals: return "missing-intervals";
    case ErrorKind::DuplicatePair: return "duplicate-pair";
    case ErrorKind::NegativeWeight: return "negative-weight";
    case ErrorKind::UnknownEdge: return "unknown-edge";
    case ErrorKind::NotIndependent: return "not-independent";
    case ErrorKind::InvalidMatching: return "invalid-matching";
    case ErrorKind::InvalidDecomposition: return "invalid-decomposition";
    case ErrorKind::MismatchedInputs: return "mismatched-inputs";
    case ErrorKind::SizeLimit: return "size-limit";
    case ErrorKind::InfeasibleSpec: return "infeasible-spec";
    case ErrorKind::InvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

/// Every failure raised by the library. Parse errors carry a 1-based
/// line/column; zero means "not applicable".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(format(kind, message, line, column)),
        kind_(kind),
        message_(message),
        line_(line),
        column_(column) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the location and kind prefix.
  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(ErrorKind kind, const std::string& message, std::size_t line,
                            std::size_t column) {
    std::string out;
    if (line != 0) {
      out += "line " + std::to_string(line);
      if (column != 0) out += ", column " + std::to_string(column);
      out += ": ";
    }
    out += std::string(to_string(kind)) + ": " + message;
    return out;
  }

  ErrorKind kind_;
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace tmatch
