#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rpla/errors.hpp"
#include "rpla/gates.hpp"

namespace rpla {

using LineId = std::uint32_t;
using GateId = std::uint32_t;

inline constexpr LineId kNoLine = std::numeric_limits<LineId>::max();

/// What feeds a line. Exactly one driver per line, by construction.
struct Driver {
  enum class Kind : std::uint8_t { PrimaryInput, Constant, GatePin };

  Kind kind = Kind::PrimaryInput;
  std::uint32_t index = 0;  // input index, constant bit, or gate id
  std::uint32_t pin = 0;    // output pin when kind == GatePin

  static Driver primary_input(std::uint32_t input_index) {
    return {Kind::PrimaryInput, input_index, 0};
  }
  static Driver constant(std::uint8_t bit) { return {Kind::Constant, bit, 0}; }
  static Driver gate_pin(GateId gate, std::uint32_t pin) {
    return {Kind::GatePin, gate, pin};
  }

  friend bool operator==(const Driver&, const Driver&) = default;
};

/// What reads a line: at most one consumer (the fan-out ban).
struct Consumer {
  enum class Kind : std::uint8_t { Unconsumed, GatePin, PrimaryOutput };

  Kind kind = Kind::Unconsumed;
  std::uint32_t index = 0;  // gate id or output index
  std::uint32_t pin = 0;    // input pin when kind == GatePin

  static Consumer unconsumed() { return {}; }
  static Consumer gate_pin(GateId gate, std::uint32_t pin) {
    return {Kind::GatePin, gate, pin};
  }
  static Consumer primary_output(std::uint32_t output_index) {
    return {Kind::PrimaryOutput, output_index, 0};
  }

  friend bool operator==(const Consumer&, const Consumer&) = default;
};

/// A single-driver, single-consumer wire.
struct Line {
  LineId id = 0;
  Driver driver;
  Consumer consumer;
};

/// Reporting tag: which half of a synthesized array a gate belongs to.
enum class Plane : std::uint8_t { None, AndPlane, OrPlane };

std::string_view plane_name(Plane plane);
std::optional<Plane> plane_from_name(std::string_view name);

struct GateInstance {
  GateId id = 0;
  GateKind kind = GateKind::Feynman;
  RoleName role = RoleName::Raw;
  Plane plane = Plane::None;
  std::vector<LineId> inputs;   // size = width
  std::vector<LineId> outputs;  // size = width

  const GateSpec& spec() const { return gate_spec(kind); }
};

/// A reversible circuit. The structure is public so emitters, metrics, and
/// tests can walk it directly; the builder methods keep the wiring discipline
/// (one driver per line, at most one consumer, no cycles by construction).
/// Line and gate ids are dense and follow creation order.
class Netlist {
public:
  std::string name;
  std::vector<Line> lines;
  std::vector<GateInstance> gates;
  std::vector<LineId> primary_inputs;
  std::vector<LineId> constant_lines;
  std::vector<LineId> primary_outputs;  // kNoLine marks an unassigned slot
  std::vector<std::string> input_labels;   // optional; defaults x0, x1, ...
  std::vector<std::string> output_labels;  // optional; defaults y0, y1, ...

  Netlist() = default;
  explicit Netlist(unsigned n_inputs, std::string netlist_name = {});

  unsigned input_count() const { return static_cast<unsigned>(primary_inputs.size()); }
  unsigned output_count() const { return static_cast<unsigned>(primary_outputs.size()); }

  const Line& line(LineId id) const;
  Line& line(LineId id);

  /// Fresh line driven by a fixed bit.
  LineId add_constant(std::uint8_t bit);

  /// Appends a gate consuming the given lines (which must exist and be
  /// unconsumed) and returns the freshly created output lines.
  std::vector<LineId> add_gate(GateKind kind, RoleName role,
                               std::span<const LineId> gate_inputs,
                               Plane plane = Plane::None);

  /// Routes an unconsumed line to primary output `output_index`.
  void mark_output(LineId id, std::uint32_t output_index);

  std::string input_label(std::uint32_t index) const;
  std::string output_label(std::uint32_t index) const;

private:
  LineId new_line(Driver driver);
  void check_line_exists(LineId id) const;
};

/// Adds a gate configured as `role`: creates the role's constant lines,
/// places the free inputs on the remaining pins in ascending order, and
/// returns the lines on the functional output pins.
std::vector<LineId> add_role_gate(Netlist& netlist, const GateRole& role,
                                  std::span<const LineId> free_inputs,
                                  Plane plane = Plane::None);

inline std::vector<LineId> add_role_gate(Netlist& netlist, const GateRole& role,
                                         std::initializer_list<LineId> free_inputs,
                                         Plane plane = Plane::None) {
  return add_role_gate(netlist, role,
                       std::span<const LineId>(free_inputs.begin(), free_inputs.size()),
                       plane);
}

/// Re-checks every structural invariant from scratch, so imported or
/// hand-edited netlists are caught too. Empty result means the netlist is
/// well formed.
std::vector<Diagnostic> validate(const Netlist& netlist);

/// Gate ids in dependency order, ties broken by ascending id.
/// Throws CircuitError(FeedbackViolation) if the dependency graph has a cycle.
std::vector<GateId> topo_order(const Netlist& netlist);

}  // namespace rpla
