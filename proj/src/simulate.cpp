#include "rpla/simulate.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <unordered_map>

#include "rpla/errors.hpp"

namespace rpla {

namespace {

void check_input_width(const Netlist& netlist, const Bits& inputs) {
  if (inputs.size() != netlist.primary_inputs.size()) {
    throw CircuitError(DiagnosticKind::WidthMismatch,
                       "expected " + std::to_string(netlist.primary_inputs.size()) +
                           " input bits, got " + std::to_string(inputs.size()));
  }
}

void check_override_width(const Netlist& netlist, const Bits& overrides) {
  if (!overrides.empty() && overrides.size() != netlist.constant_lines.size()) {
    throw CircuitError(DiagnosticKind::WidthMismatch,
                       "expected " + std::to_string(netlist.constant_lines.size()) +
                           " constant override bits, got " +
                           std::to_string(overrides.size()));
  }
}

Assignment evaluate_ordered(const Netlist& netlist, const std::vector<GateId>& order,
                            const Bits& inputs, const Bits& constant_overrides,
                            EvalStats* stats) {
  Assignment values(netlist.lines.size(), 0);
  for (std::size_t i = 0; i < netlist.primary_inputs.size(); ++i) {
    values[netlist.primary_inputs[i]] = inputs[i] ? 1 : 0;
  }
  for (std::size_t i = 0; i < netlist.constant_lines.size(); ++i) {
    const LineId id = netlist.constant_lines[i];
    const std::uint8_t declared =
        static_cast<std::uint8_t>(netlist.line(id).driver.index & 1u);
    values[id] = constant_overrides.empty() ? declared : (constant_overrides[i] ? 1 : 0);
  }
  for (GateId gid : order) {
    const GateInstance& gate = netlist.gates[gid];
    const GateSpec& spec = gate.spec();
    unsigned in = 0;
    for (LineId lid : gate.inputs) in = (in << 1) | values[lid];
    const unsigned out = spec.perm[in];
    for (std::size_t pin = 0; pin < gate.outputs.size(); ++pin) {
      values[gate.outputs[pin]] =
          static_cast<std::uint8_t>((out >> (spec.width - 1 - pin)) & 1u);
    }
    if (stats) ++stats->gates_evaluated;
  }
  return values;
}

// Input-side boundary: primary inputs, then constant lines.
Bits input_boundary_bits(const Netlist& netlist, std::uint64_t code) {
  const std::size_t n = netlist.primary_inputs.size();
  const std::size_t c = netlist.constant_lines.size();
  Bits bits(n + c, 0);
  for (std::size_t i = 0; i < n + c; ++i) {
    bits[i] = static_cast<std::uint8_t>((code >> (n + c - 1 - i)) & 1u);
  }
  return bits;
}

}  // namespace

Assignment evaluate(const Netlist& netlist, const Bits& inputs,
                    const Bits& constant_overrides, EvalStats* stats) {
  check_input_width(netlist, inputs);
  check_override_width(netlist, constant_overrides);
  return evaluate_ordered(netlist, topo_order(netlist), inputs, constant_overrides, stats);
}

Bits evaluate_outputs(const Netlist& netlist, const Bits& inputs,
                      const Bits& constant_overrides) {
  const Assignment values = evaluate(netlist, inputs, constant_overrides);
  Bits out(netlist.primary_outputs.size(), 0);
  for (std::size_t j = 0; j < netlist.primary_outputs.size(); ++j) {
    const LineId lid = netlist.primary_outputs[j];
    if (lid == kNoLine) {
      throw CircuitError(DiagnosticKind::MissingOutput,
                         "output " + std::to_string(j) + " has no line");
    }
    out[j] = values[lid];
  }
  return out;
}

TruthTable truth_table(const Netlist& netlist, unsigned cap) {
  const std::size_t n = netlist.primary_inputs.size();
  const std::size_t m = netlist.primary_outputs.size();
  if (n > cap) {
    throw CircuitError(DiagnosticKind::CapExceeded,
                       "truth table over " + std::to_string(n) +
                           " inputs exceeds the cap of " + std::to_string(cap));
  }
  if (m > 64) {
    throw CircuitError(DiagnosticKind::CapExceeded,
                       "truth table supports at most 64 outputs, netlist has " +
                           std::to_string(m));
  }
  const std::vector<GateId> order = topo_order(netlist);
  TruthTable table;
  table.n = static_cast<unsigned>(n);
  table.m = static_cast<unsigned>(m);
  table.rows.resize(std::size_t{1} << n, 0);
  Bits inputs(n, 0);
  for (std::uint64_t v = 0; v < table.rows.size(); ++v) {
    for (std::size_t i = 0; i < n; ++i) {
      inputs[i] = static_cast<std::uint8_t>((v >> (n - 1 - i)) & 1u);
    }
    const Assignment values = evaluate_ordered(netlist, order, inputs, {}, nullptr);
    std::uint64_t row = 0;
    for (std::size_t j = 0; j < m; ++j) {
      const LineId lid = netlist.primary_outputs[j];
      if (lid == kNoLine) {
        throw CircuitError(DiagnosticKind::MissingOutput,
                           "output " + std::to_string(j) + " has no line");
      }
      if (values[lid]) row |= std::uint64_t{1} << j;
    }
    table.rows[v] = row;
  }
  return table;
}

std::vector<LineId> output_boundary(const Netlist& netlist) {
  std::vector<LineId> boundary;
  std::vector<std::uint8_t> taken(netlist.lines.size(), 0);
  for (LineId lid : netlist.primary_outputs) {
    if (lid == kNoLine) {
      throw CircuitError(DiagnosticKind::MissingOutput, "netlist has an unassigned output");
    }
    boundary.push_back(lid);
    taken[lid] = 1;
  }
  for (const Line& line : netlist.lines) {
    if (line.consumer.kind == Consumer::Kind::Unconsumed && !taken[line.id]) {
      boundary.push_back(line.id);
    }
  }
  return boundary;
}

Assignment inverse_evaluate(const Netlist& netlist, const Bits& boundary_outputs) {
  const std::vector<LineId> boundary = output_boundary(netlist);
  if (boundary_outputs.size() != boundary.size()) {
    throw CircuitError(DiagnosticKind::WidthMismatch,
                       "expected " + std::to_string(boundary.size()) +
                           " boundary bits, got " +
                           std::to_string(boundary_outputs.size()));
  }
  Assignment values(netlist.lines.size(), 0);
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    values[boundary[i]] = boundary_outputs[i] ? 1 : 0;
  }
  std::array<std::array<std::uint8_t, 8>, kGateKindCount> inverse_perm{};
  for (std::size_t k = 0; k < kGateKindCount; ++k) {
    const GateSpec& spec = gate_spec(static_cast<GateKind>(k));
    for (unsigned v = 0; v < spec.table_size(); ++v) {
      inverse_perm[k][spec.perm[v]] = static_cast<std::uint8_t>(v);
    }
  }
  std::vector<GateId> order = topo_order(netlist);
  std::reverse(order.begin(), order.end());
  for (GateId gid : order) {
    const GateInstance& gate = netlist.gates[gid];
    const GateSpec& spec = gate.spec();
    unsigned out = 0;
    for (LineId lid : gate.outputs) out = (out << 1) | values[lid];
    const unsigned in = inverse_perm[static_cast<std::size_t>(gate.kind)][out];
    for (std::size_t pin = 0; pin < gate.inputs.size(); ++pin) {
      values[gate.inputs[pin]] =
          static_cast<std::uint8_t>((in >> (spec.width - 1 - pin)) & 1u);
    }
  }
  const std::size_t n = netlist.primary_inputs.size();
  Assignment result(n + netlist.constant_lines.size(), 0);
  for (std::size_t i = 0; i < n; ++i) result[i] = values[netlist.primary_inputs[i]];
  for (std::size_t i = 0; i < netlist.constant_lines.size(); ++i) {
    result[n + i] = values[netlist.constant_lines[i]];
  }
  return result;
}

namespace detail {

BijectivityCheck check_injective(const Netlist& netlist,
                                 const std::vector<LineId>& boundary,
                                 const BijectivityOptions& options) {
  const std::size_t n = netlist.primary_inputs.size();
  const std::size_t c = netlist.constant_lines.size();
  const std::vector<GateId> order = topo_order(netlist);

  const auto boundary_code = [&](const Assignment& values) {
    std::uint64_t code = 0;
    for (LineId lid : boundary) code = (code << 1) | values[lid];
    return code;
  };

  BijectivityCheck check;
  if (n + c <= options.exhaustive_cap && boundary.size() <= 63) {
    check.mode = BijectivityMode::Exhaustive;
    const std::uint64_t domain = std::uint64_t{1} << (n + c);
    // seen[code] = input code + 1, 0 meaning unseen.
    std::vector<std::uint64_t> seen(std::size_t{1} << boundary.size(), 0);
    for (std::uint64_t v = 0; v < domain; ++v) {
      const Bits bits = input_boundary_bits(netlist, v);
      const Bits inputs(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(n));
      const Bits consts(bits.begin() + static_cast<std::ptrdiff_t>(n), bits.end());
      const Assignment values = evaluate_ordered(netlist, order, inputs, consts, nullptr);
      const std::uint64_t code = boundary_code(values);
      if (seen[code]) {
        check.bijective = false;
        check.collision = {input_boundary_bits(netlist, seen[code] - 1), bits};
        return check;
      }
      seen[code] = v + 1;
    }
    check.bijective = true;
    return check;
  }

  // Sampled mode: for each sampled constant assignment, sweep every primary
  // input vector and demand per-fiber injectivity. The declared constants are
  // always the first fiber.
  check.mode = BijectivityMode::Sampled;
  if (n > options.exhaustive_cap) {
    throw CircuitError(DiagnosticKind::CapExceeded,
                       "sampled bijectivity needs at most " +
                           std::to_string(options.exhaustive_cap) +
                           " primary inputs, netlist has " + std::to_string(n));
  }
  std::mt19937_64 rng(options.seed);
  const std::uint64_t fiber = std::uint64_t{1} << n;
  Bits consts(c, 0);
  for (std::size_t i = 0; i < c; ++i) {
    consts[i] = static_cast<std::uint8_t>(
        netlist.line(netlist.constant_lines[i]).driver.index & 1u);
  }
  for (unsigned sample = 0; sample <= options.samples; ++sample) {
    if (sample > 0) {
      for (std::size_t i = 0; i < c; ++i) {
        consts[i] = static_cast<std::uint8_t>(rng() & 1u);
      }
    }
    std::unordered_map<std::uint64_t, std::uint64_t> seen;
    seen.reserve(fiber);
    Bits inputs(n, 0);
    for (std::uint64_t v = 0; v < fiber; ++v) {
      for (std::size_t i = 0; i < n; ++i) {
        inputs[i] = static_cast<std::uint8_t>((v >> (n - 1 - i)) & 1u);
      }
      const Assignment values = evaluate_ordered(netlist, order, inputs, consts, nullptr);
      const std::uint64_t code = boundary_code(values);
      const auto [it, inserted] = seen.emplace(code, v);
      if (!inserted) {
        Bits first(n + c, 0);
        Bits second(n + c, 0);
        for (std::size_t i = 0; i < n; ++i) {
          first[i] = static_cast<std::uint8_t>((it->second >> (n - 1 - i)) & 1u);
          second[i] = inputs[i];
        }
        for (std::size_t i = 0; i < c; ++i) {
          first[n + i] = consts[i];
          second[n + i] = consts[i];
        }
        check.bijective = false;
        check.collision = {std::move(first), std::move(second)};
        return check;
      }
    }
  }
  check.bijective = true;
  return check;
}

}  // namespace detail

BijectivityCheck check_circuit_bijective(const Netlist& netlist,
                                         const BijectivityOptions& options) {
  return detail::check_injective(netlist, output_boundary(netlist), options);
}

EquivalenceCheck check_equivalence(const Netlist& netlist, const MintermCover& cover,
                                   unsigned cap) {
  const std::size_t n = netlist.primary_inputs.size();
  if (n != cover.n || netlist.primary_outputs.size() != cover.output_count()) {
    throw CircuitError(DiagnosticKind::ShapeMismatch,
                       "netlist is " + std::to_string(n) + "x" +
                           std::to_string(netlist.primary_outputs.size()) +
                           ", cover is " + std::to_string(cover.n) + "x" +
                           std::to_string(cover.output_count()));
  }
  if (n > cap) {
    throw CircuitError(DiagnosticKind::CapExceeded,
                       "equivalence over " + std::to_string(n) +
                           " inputs exceeds the cap of " + std::to_string(cap));
  }
  const std::vector<GateId> order = topo_order(netlist);
  EquivalenceCheck check;
  Bits inputs(n, 0);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    for (std::size_t i = 0; i < n; ++i) {
      inputs[i] = static_cast<std::uint8_t>((v >> (n - 1 - i)) & 1u);
    }
    const Assignment values = evaluate_ordered(netlist, order, inputs, {}, nullptr);
    Bits got(cover.output_count(), 0);
    Bits expected(cover.output_count(), 0);
    bool ok = true;
    for (unsigned j = 0; j < cover.output_count(); ++j) {
      const LineId lid = netlist.primary_outputs[j];
      if (lid == kNoLine) {
        throw CircuitError(DiagnosticKind::MissingOutput,
                           "output " + std::to_string(j) + " has no line");
      }
      got[j] = values[lid];
      expected[j] = cover.contains(j, static_cast<std::uint32_t>(v)) ? 1 : 0;
      ok = ok && got[j] == expected[j];
    }
    if (!ok) {
      check.equivalent = false;
      check.mismatch_input = inputs;
      check.got = std::move(got);
      check.expected = std::move(expected);
      return check;
    }
  }
  check.equivalent = true;
  return check;
}

}  // namespace rpla
