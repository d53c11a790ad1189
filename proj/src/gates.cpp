#include "rpla/gates.hpp"

#include <bit>

#include "rpla/errors.hpp"

namespace rpla {

namespace {

// Closed-form output expressions. Pin order is (A, B[, C]) in, (P, Q[, R]) out.
//   Feynman: P = A, Q = A xor B
//   Fredkin: P = A, Q = A'B xor AC, R = A'C xor AB
//   Mux:     P = A, Q = A xor B xor C, R = A'C xor AB
void gate_outputs(GateKind kind, const std::uint8_t* in, std::uint8_t* out) {
  const std::uint8_t a = in[0];
  switch (kind) {
    case GateKind::Feynman:
      out[0] = a;
      out[1] = a ^ in[1];
      return;
    case GateKind::Fredkin: {
      const std::uint8_t b = in[1];
      const std::uint8_t c = in[2];
      out[0] = a;
      out[1] = static_cast<std::uint8_t>(((a ^ 1) & b) ^ (a & c));
      out[2] = static_cast<std::uint8_t>(((a ^ 1) & c) ^ (a & b));
      return;
    }
    case GateKind::Mux: {
      const std::uint8_t b = in[1];
      const std::uint8_t c = in[2];
      out[0] = a;
      out[1] = static_cast<std::uint8_t>(a ^ b ^ c);
      out[2] = static_cast<std::uint8_t>(((a ^ 1) & c) ^ (a & b));
      return;
    }
  }
}

void require_width(const GateSpec& spec, std::size_t got) {
  if (got != spec.width) {
    throw CircuitError(DiagnosticKind::WidthMismatch,
                       std::string(gate_kind_name(spec.kind)) + " gate has " +
                           std::to_string(spec.width) + " pins, got " +
                           std::to_string(got) + " bits");
  }
}

}  // namespace

GateSpec build_gate(GateKind kind) {
  GateSpec spec;
  spec.kind = kind;
  spec.width = gate_width(kind);
  switch (kind) {
    case GateKind::Feynman:
      spec.quantum_cost = 1;
      spec.logic_signature = {1, 0, 0};
      break;
    case GateKind::Fredkin:
      spec.quantum_cost = 5;
      spec.logic_signature = {2, 4, 2};
      break;
    case GateKind::Mux:
      spec.quantum_cost = 4;
      spec.logic_signature = {3, 2, 1};
      break;
  }
  std::uint8_t in[3];
  std::uint8_t out[3];
  for (unsigned v = 0; v < spec.table_size(); ++v) {
    for (unsigned p = 0; p < spec.width; ++p) {
      in[p] = (v >> (spec.width - 1 - p)) & 1u;
    }
    gate_outputs(kind, in, out);
    unsigned image = 0;
    for (unsigned p = 0; p < spec.width; ++p) {
      image = (image << 1) | out[p];
    }
    spec.perm[v] = static_cast<std::uint8_t>(image);
  }
  return spec;
}

const GateSpec& gate_spec(GateKind kind) {
  static const GateSpec feynman = build_gate(GateKind::Feynman);
  static const GateSpec fredkin = build_gate(GateKind::Fredkin);
  static const GateSpec mux = build_gate(GateKind::Mux);
  switch (kind) {
    case GateKind::Fredkin: return fredkin;
    case GateKind::Mux: return mux;
    case GateKind::Feynman: break;
  }
  return feynman;
}

unsigned gate_width(GateKind kind) {
  return kind == GateKind::Feynman ? 2u : 3u;
}

std::string_view gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::Feynman: return "feynman";
    case GateKind::Fredkin: return "fredkin";
    case GateKind::Mux: return "mux";
  }
  return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  if (name == "feynman") return GateKind::Feynman;
  if (name == "fredkin") return GateKind::Fredkin;
  if (name == "mux") return GateKind::Mux;
  return std::nullopt;
}

unsigned encode_bits(std::span<const std::uint8_t> bits) {
  unsigned value = 0;
  for (std::uint8_t b : bits) value = (value << 1) | (b & 1u);
  return value;
}

Bits decode_bits(unsigned value, unsigned width) {
  Bits bits(width);
  for (unsigned p = 0; p < width; ++p) {
    bits[p] = (value >> (width - 1 - p)) & 1u;
  }
  return bits;
}

Bits eval_gate(const GateSpec& spec, std::span<const std::uint8_t> inputs) {
  require_width(spec, inputs.size());
  return decode_bits(spec.perm[encode_bits(inputs)], spec.width);
}

Bits invert_gate(const GateSpec& spec, std::span<const std::uint8_t> outputs) {
  require_width(spec, outputs.size());
  const unsigned image = encode_bits(outputs);
  for (unsigned v = 0; v < spec.table_size(); ++v) {
    if (spec.perm[v] == image) return decode_bits(v, spec.width);
  }
  // unreachable for a bijective table
  throw CircuitError(DiagnosticKind::InconsistentWiring,
                     "gate table has no preimage for value " + std::to_string(image));
}

bool is_reversible(std::span<const std::uint8_t> perm) {
  std::array<bool, 256> seen{};
  for (std::uint8_t v : perm) {
    if (v >= perm.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::optional<unsigned> find_nonconservative_input(std::span<const std::uint8_t> perm) {
  for (unsigned v = 0; v < perm.size(); ++v) {
    if (std::popcount(v) != std::popcount(static_cast<unsigned>(perm[v]))) return v;
  }
  return std::nullopt;
}

bool is_conservative(std::span<const std::uint8_t> perm) {
  return !find_nonconservative_input(perm).has_value();
}

std::string_view role_name_string(RoleName role) {
  switch (role) {
    case RoleName::Copier: return "copier";
    case RoleName::Not: return "not";
    case RoleName::And: return "and";
    case RoleName::Or: return "or";
    case RoleName::Raw: return "raw";
  }
  return "?";
}

std::optional<RoleName> role_from_string(std::string_view name) {
  if (name == "copier") return RoleName::Copier;
  if (name == "not") return RoleName::Not;
  if (name == "and") return RoleName::And;
  if (name == "or") return RoleName::Or;
  if (name == "raw") return RoleName::Raw;
  return std::nullopt;
}

unsigned GateRole::free_pin_count() const {
  return gate_width(base) - static_cast<unsigned>(constant_pins.size());
}

GateRole copier_role() {
  return {GateKind::Feynman, RoleName::Copier, {{1, 0}}, {0, 1}};
}

GateRole not_role() {
  return {GateKind::Feynman, RoleName::Not, {{1, 1}}, {1}};
}

GateRole and_role(GateKind base) {
  if (base == GateKind::Feynman) {
    throw CircuitError(DiagnosticKind::WidthMismatch,
                       "the and role needs a three-pin gate");
  }
  return {base, RoleName::And, {{2, 0}}, {2}};
}

GateRole or_role(GateKind base) {
  if (base == GateKind::Feynman) {
    throw CircuitError(DiagnosticKind::WidthMismatch,
                       "the or role needs a three-pin gate");
  }
  return {base, RoleName::Or, {{1, 1}}, {2}};
}

Bits apply_role(const GateRole& role, std::span<const std::uint8_t> free_inputs) {
  const GateSpec& spec = gate_spec(role.base);
  if (free_inputs.size() != role.free_pin_count()) {
    throw CircuitError(DiagnosticKind::WidthMismatch,
                       "role expects " + std::to_string(role.free_pin_count()) +
                           " free inputs, got " + std::to_string(free_inputs.size()));
  }
  Bits pins(spec.width, 2);  // 2 marks a not-yet-filled pin
  for (auto [pin, bit] : role.constant_pins) pins[pin] = bit;
  std::size_t next = 0;
  for (unsigned p = 0; p < spec.width; ++p) {
    if (pins[p] == 2) pins[p] = free_inputs[next++] & 1u;
  }
  const Bits outputs = eval_gate(spec, pins);
  Bits result;
  result.reserve(role.functional_outputs.size());
  for (unsigned p : role.functional_outputs) result.push_back(outputs[p]);
  return result;
}

}  // namespace rpla
