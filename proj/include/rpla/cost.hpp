#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "rpla/netlist.hpp"
#include "rpla/pla.hpp"
#include "rpla/synthesize.hpp"

namespace rpla {

/// Sum of the per-gate quantum costs (Feynman 1, Mux 4, Fredkin 5).
std::uint64_t quantum_cost(const Netlist& netlist);

/// Number of lines that must be fed a fixed 0 or 1.
std::uint64_t constant_inputs(const Netlist& netlist);

struct GarbageCount {
  // Lines nothing reads: neither a gate pin nor a primary output.
  std::uint64_t strict = 0;
  // Set when strict > 0 to flag the alternative accounting.
  std::string note;

  friend bool operator==(const GarbageCount&, const GarbageCount&) = default;
};

GarbageCount garbage_outputs(const Netlist& netlist);

/// Componentwise sum of every gate's output-expression operator counts.
LogicCalc total_logical_calculation(const Netlist& netlist);

/// Every metric for one netlist, optionally restricted to one plane.
/// Plane scoping: gates by their own tag, constants by the consuming gate's
/// tag, garbage by the driving gate's tag.
struct CostReport {
  std::array<std::uint64_t, kGateKindCount> gates_by_kind{};
  std::uint64_t gate_total = 0;
  std::uint64_t quantum_cost = 0;
  std::uint64_t constant_inputs = 0;
  std::uint64_t garbage_strict = 0;
  std::string garbage_note;
  LogicCalc logic_calc;

  friend bool operator==(const CostReport&, const CostReport&) = default;
};

CostReport cost_report(const Netlist& netlist);
CostReport cost_report(const Netlist& netlist, Plane plane);

/// One backend's synthesis of a cover, measured whole and per plane.
struct BackendCosts {
  Backend backend = Backend::MuxFeynman;
  CostReport total;
  CostReport and_plane;
  CostReport or_plane;
};

struct ComparisonTable {
  std::string name;
  bool full_plane = false;
  BackendCosts proposed;
  BackendCosts existing;
};

/// Synthesizes `spec` with both backends and collects their reports.
ComparisonTable compare(const PlaSpec& spec, bool full_plane = false,
                        Backend proposed = Backend::MuxFeynman,
                        Backend existing = Backend::FredkinFeynman);

}  // namespace rpla
