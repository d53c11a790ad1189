#include "rpla/cost.hpp"

namespace rpla {

namespace {

constexpr std::string_view kGarbageNote =
    "structural count of unread lines; an accounting that treats copier and "
    "pass-through byproducts as reusable reports 0";

bool plane_matches(std::optional<Plane> filter, Plane plane) {
  return !filter || *filter == plane;
}

/// Plane of the gate driving (or consuming) a line, None for boundary ends.
Plane driver_plane(const Netlist& netlist, const Line& line) {
  if (line.driver.kind != Driver::Kind::GatePin) return Plane::None;
  return netlist.gates[line.driver.index].plane;
}

Plane consumer_plane(const Netlist& netlist, const Line& line) {
  if (line.consumer.kind != Consumer::Kind::GatePin) return Plane::None;
  return netlist.gates[line.consumer.index].plane;
}

CostReport build_report(const Netlist& netlist, std::optional<Plane> filter) {
  CostReport report;
  for (const GateInstance& gate : netlist.gates) {
    if (!plane_matches(filter, gate.plane)) continue;
    ++report.gates_by_kind[static_cast<std::size_t>(gate.kind)];
    ++report.gate_total;
    report.quantum_cost += gate.spec().quantum_cost;
    report.logic_calc += gate.spec().logic_signature;
  }
  for (LineId id : netlist.constant_lines) {
    if (plane_matches(filter, consumer_plane(netlist, netlist.line(id)))) {
      ++report.constant_inputs;
    }
  }
  for (const Line& line : netlist.lines) {
    if (line.consumer.kind != Consumer::Kind::Unconsumed) continue;
    if (plane_matches(filter, driver_plane(netlist, line))) ++report.garbage_strict;
  }
  if (report.garbage_strict > 0) report.garbage_note = kGarbageNote;
  return report;
}

}  // namespace

std::uint64_t quantum_cost(const Netlist& netlist) {
  std::uint64_t total = 0;
  for (const GateInstance& gate : netlist.gates) total += gate.spec().quantum_cost;
  return total;
}

std::uint64_t constant_inputs(const Netlist& netlist) {
  return netlist.constant_lines.size();
}

GarbageCount garbage_outputs(const Netlist& netlist) {
  GarbageCount count;
  for (const Line& line : netlist.lines) {
    if (line.consumer.kind == Consumer::Kind::Unconsumed) ++count.strict;
  }
  if (count.strict > 0) count.note = kGarbageNote;
  return count;
}

LogicCalc total_logical_calculation(const Netlist& netlist) {
  LogicCalc total;
  for (const GateInstance& gate : netlist.gates) total += gate.spec().logic_signature;
  return total;
}

CostReport cost_report(const Netlist& netlist) {
  return build_report(netlist, std::nullopt);
}

CostReport cost_report(const Netlist& netlist, Plane plane) {
  return build_report(netlist, plane);
}

ComparisonTable compare(const PlaSpec& spec, bool full_plane, Backend proposed,
                        Backend existing) {
  ComparisonTable table;
  table.name = "pla";  // callers usually overwrite with the source file stem
  table.full_plane = full_plane;
  for (auto* side : {&table.proposed, &table.existing}) {
    const Backend backend = side == &table.proposed ? proposed : existing;
    SynthOptions options;
    options.backend = backend;
    options.full_plane = full_plane;
    const Netlist netlist = synthesize(spec, options);
    side->backend = backend;
    side->total = cost_report(netlist);
    side->and_plane = cost_report(netlist, Plane::AndPlane);
    side->or_plane = cost_report(netlist, Plane::OrPlane);
  }
  return table;
}

}  // namespace rpla
