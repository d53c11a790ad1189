#include "rpla/netlist.hpp"

#include <algorithm>
#include <queue>

namespace rpla {

std::string_view plane_name(Plane plane) {
  switch (plane) {
    case Plane::None: return "none";
    case Plane::AndPlane: return "and";
    case Plane::OrPlane: return "or";
  }
  return "?";
}

std::optional<Plane> plane_from_name(std::string_view name) {
  if (name == "none") return Plane::None;
  if (name == "and") return Plane::AndPlane;
  if (name == "or") return Plane::OrPlane;
  return std::nullopt;
}

Netlist::Netlist(unsigned n_inputs, std::string netlist_name)
    : name(std::move(netlist_name)) {
  primary_inputs.reserve(n_inputs);
  for (unsigned i = 0; i < n_inputs; ++i) {
    primary_inputs.push_back(new_line(Driver::primary_input(i)));
  }
}

const Line& Netlist::line(LineId id) const {
  check_line_exists(id);
  return lines[id];
}

Line& Netlist::line(LineId id) {
  check_line_exists(id);
  return lines[id];
}

LineId Netlist::new_line(Driver driver) {
  const LineId id = static_cast<LineId>(lines.size());
  lines.push_back(Line{id, driver, Consumer::unconsumed()});
  return id;
}

void Netlist::check_line_exists(LineId id) const {
  if (id >= lines.size()) {
    throw CircuitError(DiagnosticKind::UnknownLine,
                       "line " + std::to_string(id) + " does not exist", {id});
  }
}

LineId Netlist::add_constant(std::uint8_t bit) {
  const LineId id = new_line(Driver::constant(bit & 1u));
  constant_lines.push_back(id);
  return id;
}

std::vector<LineId> Netlist::add_gate(GateKind kind, RoleName role,
                                      std::span<const LineId> gate_inputs,
                                      Plane plane) {
  const GateSpec& spec = gate_spec(kind);
  if (gate_inputs.size() != spec.width) {
    throw CircuitError(DiagnosticKind::WidthMismatch,
                       std::string(gate_kind_name(kind)) + " gate takes " +
                           std::to_string(spec.width) + " lines, got " +
                           std::to_string(gate_inputs.size()));
  }
  for (LineId id : gate_inputs) {
    check_line_exists(id);
    if (lines[id].consumer.kind != Consumer::Kind::Unconsumed) {
      throw CircuitError(DiagnosticKind::FanOutViolation,
                         "line " + std::to_string(id) + " already has a consumer",
                         {id});
    }
  }
  // reject the same line appearing on two pins of this gate
  for (std::size_t i = 0; i < gate_inputs.size(); ++i) {
    for (std::size_t j = i + 1; j < gate_inputs.size(); ++j) {
      if (gate_inputs[i] == gate_inputs[j]) {
        throw CircuitError(DiagnosticKind::FanOutViolation,
                           "line " + std::to_string(gate_inputs[i]) +
                               " wired to two pins of one gate",
                           {gate_inputs[i]});
      }
    }
  }

  const GateId gate_id = static_cast<GateId>(gates.size());
  GateInstance gate;
  gate.id = gate_id;
  gate.kind = kind;
  gate.role = role;
  gate.plane = plane;
  gate.inputs.assign(gate_inputs.begin(), gate_inputs.end());
  for (unsigned pin = 0; pin < spec.width; ++pin) {
    lines[gate.inputs[pin]].consumer = Consumer::gate_pin(gate_id, pin);
    gate.outputs.push_back(new_line(Driver::gate_pin(gate_id, pin)));
  }
  gates.push_back(std::move(gate));
  return gates.back().outputs;
}

void Netlist::mark_output(LineId id, std::uint32_t output_index) {
  check_line_exists(id);
  if (lines[id].consumer.kind != Consumer::Kind::Unconsumed) {
    throw CircuitError(DiagnosticKind::FanOutViolation,
                       "line " + std::to_string(id) + " already has a consumer",
                       {id});
  }
  if (output_index >= primary_outputs.size()) {
    primary_outputs.resize(output_index + 1, kNoLine);
  }
  if (primary_outputs[output_index] != kNoLine) {
    throw CircuitError(DiagnosticKind::DuplicateOutput,
                       "output " + std::to_string(output_index) +
                           " is already assigned",
                       {output_index});
  }
  primary_outputs[output_index] = id;
  lines[id].consumer = Consumer::primary_output(output_index);
}

std::string Netlist::input_label(std::uint32_t index) const {
  if (index < input_labels.size() && !input_labels[index].empty()) {
    return input_labels[index];
  }
  return "x" + std::to_string(index);
}

std::string Netlist::output_label(std::uint32_t index) const {
  if (index < output_labels.size() && !output_labels[index].empty()) {
    return output_labels[index];
  }
  return "y" + std::to_string(index);
}

std::vector<LineId> add_role_gate(Netlist& netlist, const GateRole& role,
                                  std::span<const LineId> free_inputs,
                                  Plane plane) {
  const unsigned width = gate_width(role.base);
  if (free_inputs.size() != role.free_pin_count()) {
    throw CircuitError(DiagnosticKind::WidthMismatch,
                       "role expects " + std::to_string(role.free_pin_count()) +
                           " lines, got " + std::to_string(free_inputs.size()));
  }
  std::vector<LineId> pins(width, kNoLine);
  for (auto [pin, bit] : role.constant_pins) {
    pins[pin] = netlist.add_constant(bit);
  }
  std::size_t next = 0;
  for (unsigned pin = 0; pin < width; ++pin) {
    if (pins[pin] == kNoLine) pins[pin] = free_inputs[next++];
  }
  const std::vector<LineId> outputs = netlist.add_gate(role.base, role.name, pins, plane);
  std::vector<LineId> functional;
  functional.reserve(role.functional_outputs.size());
  for (unsigned pin : role.functional_outputs) functional.push_back(outputs[pin]);
  return functional;
}

namespace {

void diag(std::vector<Diagnostic>& out, DiagnosticKind kind, std::string message,
          std::vector<std::uint32_t> ids = {}) {
  out.push_back(Diagnostic{kind, std::move(message), std::move(ids)});
}

}  // namespace

std::vector<Diagnostic> validate(const Netlist& netlist) {
  std::vector<Diagnostic> diags;
  const std::size_t line_count = netlist.lines.size();

  const auto line_ok = [&](LineId id, const char* what) {
    if (id == kNoLine || id >= line_count) {
      diag(diags, DiagnosticKind::UnknownLine,
           std::string(what) + " references missing line " + std::to_string(id),
           {id});
      return false;
    }
    return true;
  };

  for (std::size_t i = 0; i < netlist.lines.size(); ++i) {
    if (netlist.lines[i].id != i) {
      diag(diags, DiagnosticKind::InconsistentWiring,
           "line at position " + std::to_string(i) + " carries id " +
               std::to_string(netlist.lines[i].id),
           {static_cast<std::uint32_t>(i)});
    }
  }
  for (std::size_t g = 0; g < netlist.gates.size(); ++g) {
    if (netlist.gates[g].id != g) {
      diag(diags, DiagnosticKind::InconsistentWiring,
           "gate at position " + std::to_string(g) + " carries id " +
               std::to_string(netlist.gates[g].id),
           {static_cast<std::uint32_t>(g)});
    }
  }

  // recompute drivers from the ground truth: input list, constant list, gate outputs
  std::vector<std::vector<Driver>> drivers(line_count);
  for (std::uint32_t i = 0; i < netlist.primary_inputs.size(); ++i) {
    const LineId id = netlist.primary_inputs[i];
    if (line_ok(id, "primary input")) drivers[id].push_back(Driver::primary_input(i));
  }
  for (LineId id : netlist.constant_lines) {
    if (line_ok(id, "constant list")) {
      drivers[id].push_back(Driver::constant(
          static_cast<std::uint8_t>(netlist.lines[id].driver.index & 1u)));
    }
  }
  for (const GateInstance& gate : netlist.gates) {
    const unsigned width = gate.spec().width;
    if (gate.inputs.size() != width || gate.outputs.size() != width) {
      diag(diags, DiagnosticKind::WidthMismatch,
           "gate " + std::to_string(gate.id) + " has " +
               std::to_string(gate.inputs.size()) + " inputs / " +
               std::to_string(gate.outputs.size()) + " outputs but width " +
               std::to_string(width),
           {gate.id});
    }
    for (std::uint32_t pin = 0; pin < gate.outputs.size(); ++pin) {
      const LineId id = gate.outputs[pin];
      if (line_ok(id, "gate output")) {
        drivers[id].push_back(Driver::gate_pin(gate.id, pin));
      }
    }
  }
  for (LineId id = 0; id < line_count; ++id) {
    if (drivers[id].size() > 1) {
      diag(diags, DiagnosticKind::DuplicateDriver,
           "line " + std::to_string(id) + " has " +
               std::to_string(drivers[id].size()) + " drivers",
           {id});
    } else if (drivers[id].empty()) {
      diag(diags, DiagnosticKind::InconsistentWiring,
           "line " + std::to_string(id) + " has no driver source", {id});
    } else if (!(drivers[id][0] == netlist.lines[id].driver)) {
      diag(diags, DiagnosticKind::InconsistentWiring,
           "line " + std::to_string(id) + " stores a driver that disagrees with "
           "the gate and input records",
           {id});
    }
  }

  // recompute consumers: gate inputs plus primary outputs
  std::vector<std::vector<Consumer>> consumers(line_count);
  for (const GateInstance& gate : netlist.gates) {
    for (std::uint32_t pin = 0; pin < gate.inputs.size(); ++pin) {
      const LineId id = gate.inputs[pin];
      if (line_ok(id, "gate input")) {
        consumers[id].push_back(Consumer::gate_pin(gate.id, pin));
      }
    }
  }
  for (std::uint32_t j = 0; j < netlist.primary_outputs.size(); ++j) {
    const LineId id = netlist.primary_outputs[j];
    if (id == kNoLine) {
      diag(diags, DiagnosticKind::MissingOutput,
           "output " + std::to_string(j) + " has no line assigned", {j});
      continue;
    }
    if (line_ok(id, "primary output")) {
      consumers[id].push_back(Consumer::primary_output(j));
      if (netlist.lines[id].driver.kind == Driver::Kind::Constant) {
        diag(diags, DiagnosticKind::ConstantDrivenOutput,
             "output " + std::to_string(j) + " is wired straight to a constant",
             {j, id});
      }
    }
  }
  for (LineId id = 0; id < line_count; ++id) {
    if (consumers[id].size() > 1) {
      diag(diags, DiagnosticKind::FanOutViolation,
           "line " + std::to_string(id) + " has " +
               std::to_string(consumers[id].size()) + " consumers",
           {id});
    } else {
      const Consumer expect =
          consumers[id].empty() ? Consumer::unconsumed() : consumers[id][0];
      if (!(expect == netlist.lines[id].consumer)) {
        diag(diags, DiagnosticKind::InconsistentWiring,
             "line " + std::to_string(id) + " stores a consumer that disagrees "
             "with the gate and output records",
             {id});
      }
    }
  }

  // feedback check over the gate dependency graph
  const std::size_t gate_count = netlist.gates.size();
  std::vector<std::uint32_t> pending(gate_count, 0);
  std::vector<std::vector<GateId>> fanout(gate_count);
  bool edges_ok = true;
  for (const GateInstance& gate : netlist.gates) {
    for (LineId id : gate.inputs) {
      if (id == kNoLine || id >= line_count) {
        edges_ok = false;
        continue;
      }
      const Driver& driver = netlist.lines[id].driver;
      if (driver.kind == Driver::Kind::GatePin) {
        if (driver.index >= gate_count) {
          edges_ok = false;
          continue;
        }
        fanout[driver.index].push_back(gate.id);
        ++pending[gate.id];
      }
    }
  }
  if (edges_ok) {
    std::priority_queue<GateId, std::vector<GateId>, std::greater<>> ready;
    for (GateId g = 0; g < gate_count; ++g) {
      if (pending[g] == 0) ready.push(g);
    }
    std::size_t done = 0;
    while (!ready.empty()) {
      const GateId g = ready.top();
      ready.pop();
      ++done;
      for (GateId next : fanout[g]) {
        if (--pending[next] == 0) ready.push(next);
      }
    }
    if (done != gate_count) {
      std::vector<std::uint32_t> stuck;
      for (GateId g = 0; g < gate_count; ++g) {
        if (pending[g] > 0) stuck.push_back(g);
      }
      diag(diags, DiagnosticKind::FeedbackViolation,
           "gate dependency graph has a cycle through " +
               std::to_string(stuck.size()) + " gate(s)",
           std::move(stuck));
    }
  }

  return diags;
}

std::vector<GateId> topo_order(const Netlist& netlist) {
  const std::size_t gate_count = netlist.gates.size();
  std::vector<std::uint32_t> pending(gate_count, 0);
  std::vector<std::vector<GateId>> fanout(gate_count);
  for (const GateInstance& gate : netlist.gates) {
    for (LineId id : gate.inputs) {
      if (id >= netlist.lines.size()) {
        throw CircuitError(DiagnosticKind::UnknownLine,
                           "gate " + std::to_string(gate.id) +
                               " reads missing line " + std::to_string(id),
                           {gate.id, id});
      }
      const Driver& driver = netlist.lines[id].driver;
      if (driver.kind == Driver::Kind::GatePin) {
        fanout[driver.index].push_back(gate.id);
        ++pending[gate.id];
      }
    }
  }
  std::priority_queue<GateId, std::vector<GateId>, std::greater<>> ready;
  for (GateId g = 0; g < gate_count; ++g) {
    if (pending[g] == 0) ready.push(g);
  }
  std::vector<GateId> order;
  order.reserve(gate_count);
  while (!ready.empty()) {
    const GateId g = ready.top();
    ready.pop();
    order.push_back(g);
    for (GateId next : fanout[g]) {
      if (--pending[next] == 0) ready.push(next);
    }
  }
  if (order.size() != gate_count) {
    throw CircuitError(DiagnosticKind::FeedbackViolation,
                       "gate dependency graph has a cycle");
  }
  return order;
}

}  // namespace rpla
