#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rpla {

enum class DiagnosticKind : std::uint8_t {
  FanOutViolation,       // a line with more than one consumer
  FeedbackViolation,     // a cycle in the gate dependency graph
  UnknownLine,           // reference to a line id that does not exist
  WidthMismatch,         // pin count does not match the gate width
  DuplicateDriver,       // a line with more than one driver
  DuplicateOutput,       // an output index assigned twice
  InconsistentWiring,    // stored driver/consumer disagrees with gate records
  ConstantDrivenOutput,  // a primary output wired straight to a constant
  MissingOutput,         // a declared output index with no line assigned
  CapExceeded,           // enumeration larger than the configured cap
  ShapeMismatch,         // vector length does not match the expected arity
};

std::string_view diagnostic_kind_name(DiagnosticKind kind);

/// One validation finding: the rule broken plus the ids involved.
struct Diagnostic {
  DiagnosticKind kind;
  std::string message;
  std::vector<std::uint32_t> ids;
};

/// Thrown by builder and simulator entry points on contract violations.
class CircuitError : public std::runtime_error {
public:
  CircuitError(DiagnosticKind kind, const std::string& message,
               std::vector<std::uint32_t> ids = {})
      : std::runtime_error(message), kind_(kind), ids_(std::move(ids)) {}

  DiagnosticKind kind() const { return kind_; }
  const std::vector<std::uint32_t>& ids() const { return ids_; }

private:
  DiagnosticKind kind_;
  std::vector<std::uint32_t> ids_;
};

/// Thrown by the text parsers (.pla files, netlist documents).
/// Line and column are 1-based; 0 means "not tied to a position".
class ParseError : public std::runtime_error {
public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error(format(line, column, message)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  static std::string format(int line, int column, const std::string& message);

  int line_;
  int column_;
};

}  // namespace rpla
