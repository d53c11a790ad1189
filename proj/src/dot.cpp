#include "rpla/dot.hpp"

#include <algorithm>
#include <sstream>

namespace rpla {

namespace {

std::string quote(const std::string& text) {
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') quoted += '\\';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string endpoint(const Netlist& netlist, const Line& line, bool driver_side) {
  if (driver_side) {
    switch (line.driver.kind) {
      case Driver::Kind::PrimaryInput: return "in" + std::to_string(line.driver.index);
      case Driver::Kind::Constant: return "c" + std::to_string(line.id);
      case Driver::Kind::GatePin: return "g" + std::to_string(line.driver.index);
    }
  } else {
    switch (line.consumer.kind) {
      case Consumer::Kind::Unconsumed: return "unconsumed";
      case Consumer::Kind::GatePin: return "g" + std::to_string(line.consumer.index);
      case Consumer::Kind::PrimaryOutput:
        return "out" + std::to_string(line.consumer.index);
    }
  }
  (void)netlist;
  return "?";
}

}  // namespace

std::string emit_dot(const Netlist& netlist) {
  std::ostringstream out;
  out << "digraph " << quote(netlist.name.empty() ? "netlist" : netlist.name)
      << " {\n";
  out << "  rankdir=LR;\n";
  for (std::uint32_t i = 0; i < netlist.input_count(); ++i) {
    out << "  in" << i << " [shape=plaintext, label=" << quote(netlist.input_label(i))
        << "];\n";
  }
  for (LineId id : netlist.constant_lines) {
    out << "  c" << id << " [shape=circle, label="
        << quote(std::to_string(netlist.line(id).driver.index & 1u)) << "];\n";
  }
  for (const GateInstance& gate : netlist.gates) {
    std::string label = "g" + std::to_string(gate.id) + ": " +
                        std::string(gate_kind_name(gate.kind));
    if (gate.role != RoleName::Raw) {
      label += "/" + std::string(role_name_string(gate.role));
    }
    out << "  g" << gate.id << " [shape=box, label=" << quote(label) << "];\n";
  }
  for (std::uint32_t j = 0; j < netlist.output_count(); ++j) {
    out << "  out" << j << " [shape=plaintext, label=" << quote(netlist.output_label(j))
        << "];\n";
  }
  const bool any_unconsumed =
      std::any_of(netlist.lines.begin(), netlist.lines.end(), [](const Line& line) {
        return line.consumer.kind == Consumer::Kind::Unconsumed;
      });
  if (any_unconsumed) {
    out << "  unconsumed [shape=point];\n";
  }
  for (const Line& line : netlist.lines) {
    out << "  " << endpoint(netlist, line, true) << " -> "
        << endpoint(netlist, line, false) << " [label=" << quote(std::to_string(line.id))
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace rpla
