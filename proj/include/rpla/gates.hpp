#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace rpla {

/// The three reversible gates the toolkit is built from.
enum class GateKind : std::uint8_t { Feynman, Fredkin, Mux };

inline constexpr std::size_t kGateKindCount = 3;

/// Operator counts (two-input XOR, two-input AND, NOT) appearing in a set of
/// gate output expressions. Adds componentwise.
struct LogicCalc {
  std::uint64_t xors = 0;
  std::uint64_t ands = 0;
  std::uint64_t nots = 0;

  LogicCalc& operator+=(const LogicCalc& other) {
    xors += other.xors;
    ands += other.ands;
    nots += other.nots;
    return *this;
  }
  friend LogicCalc operator+(LogicCalc a, const LogicCalc& b) { return a += b; }
  friend LogicCalc operator*(std::uint64_t k, const LogicCalc& s) {
    return {k * s.xors, k * s.ands, k * s.nots};
  }
  friend bool operator==(const LogicCalc&, const LogicCalc&) = default;
};

/// Bit values are stored one per byte, 0 or 1.
using Bits = std::vector<std::uint8_t>;

/// A reversible gate as an explicit bijection over its 2^width input vectors,
/// plus the metadata the cost metrics need.
///
/// Pin 0 (conventionally named A) is the most significant bit of a table
/// index, so the tables are identical across implementations.
struct GateSpec {
  GateKind kind = GateKind::Feynman;
  unsigned width = 0;
  std::array<std::uint8_t, 8> perm{};  // first 2^width entries are meaningful
  unsigned quantum_cost = 0;
  LogicCalc logic_signature;

  unsigned table_size() const { return 1u << width; }
};

/// Generates the permutation table of a gate by evaluating its closed-form
/// output expressions on every input vector.
GateSpec build_gate(GateKind kind);

/// Cached GateSpec per kind; built once, immutable afterwards.
const GateSpec& gate_spec(GateKind kind);

unsigned gate_width(GateKind kind);
std::string_view gate_kind_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);

unsigned encode_bits(std::span<const std::uint8_t> bits);
Bits decode_bits(unsigned value, unsigned width);

/// Table lookup: inputs -> outputs. Throws CircuitError(WidthMismatch) when
/// the input vector does not match the gate width.
Bits eval_gate(const GateSpec& spec, std::span<const std::uint8_t> inputs);

/// Unique preimage: outputs -> inputs.
Bits invert_gate(const GateSpec& spec, std::span<const std::uint8_t> outputs);

/// True iff the table is a permutation (every value appears exactly once).
bool is_reversible(std::span<const std::uint8_t> perm);

/// True iff the table preserves Hamming weight on every entry.
bool is_conservative(std::span<const std::uint8_t> perm);

/// First input index whose image changes Hamming weight, if any.
std::optional<unsigned> find_nonconservative_input(std::span<const std::uint8_t> perm);

enum class RoleName : std::uint8_t { Copier, Not, And, Or, Raw };

std::string_view role_name_string(RoleName role);
std::optional<RoleName> role_from_string(std::string_view name);

/// A gate specialized by tying pins to constants. The remaining free pins
/// compute a plain Boolean function on the designated output pins:
///   Copier: Feynman, B=0, outputs P and Q both carry A
///   Not:    Feynman, B=1, output Q carries the complement of A
///   And:    Mux or Fredkin, C=0, output R = A AND B
///   Or:     Mux or Fredkin, B=1, output R = A OR C
struct GateRole {
  GateKind base = GateKind::Feynman;
  RoleName name = RoleName::Raw;
  std::vector<std::pair<unsigned, std::uint8_t>> constant_pins;  // pin -> bit
  std::vector<unsigned> functional_outputs;                      // pin indices

  unsigned free_pin_count() const;
};

GateRole copier_role();
GateRole not_role();
GateRole and_role(GateKind base = GateKind::Mux);
GateRole or_role(GateKind base = GateKind::Mux);

/// Fills the constant pins, evaluates the base gate, and returns the bits on
/// the functional output pins. Free inputs are taken in ascending pin order.
Bits apply_role(const GateRole& role, std::span<const std::uint8_t> free_inputs);

}  // namespace rpla
