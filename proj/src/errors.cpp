#include "rpla/errors.hpp"

namespace rpla {

std::string_view diagnostic_kind_name(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::FanOutViolation: return "fan-out violation";
    case DiagnosticKind::FeedbackViolation: return "feedback violation";
    case DiagnosticKind::UnknownLine: return "unknown line";
    case DiagnosticKind::WidthMismatch: return "width mismatch";
    case DiagnosticKind::DuplicateDriver: return "duplicate driver";
    case DiagnosticKind::DuplicateOutput: return "duplicate output";
    case DiagnosticKind::InconsistentWiring: return "inconsistent wiring";
    case DiagnosticKind::ConstantDrivenOutput: return "constant-driven output";
    case DiagnosticKind::MissingOutput: return "missing output";
    case DiagnosticKind::CapExceeded: return "cap exceeded";
    case DiagnosticKind::ShapeMismatch: return "shape mismatch";
  }
  return "unknown";
}

std::string ParseError::format(int line, int column, const std::string& message) {
  if (line <= 0) return message;
  std::string out = "line " + std::to_string(line);
  if (column > 0) out += ", column " + std::to_string(column);
  out += ": " + message;
  return out;
}

}  // namespace rpla
