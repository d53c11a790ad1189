#include "rpla/synthesize.hpp"

#include <algorithm>
#include <numeric>

#include "rpla/errors.hpp"

namespace rpla {

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::MuxFeynman: return "mux+feynman";
    case Backend::FredkinFeynman: return "fredkin+feynman";
  }
  return "?";
}

std::string_view backend_cli_name(Backend backend) {
  switch (backend) {
    case Backend::MuxFeynman: return "mux";
    case Backend::FredkinFeynman: return "fredkin";
  }
  return "?";
}

std::optional<Backend> backend_from_name(std::string_view name) {
  if (name == "mux" || name == "mux+feynman") return Backend::MuxFeynman;
  if (name == "fredkin" || name == "fredkin+feynman") return Backend::FredkinFeynman;
  return std::nullopt;
}

GateKind backend_and_or_kind(Backend backend) {
  return backend == Backend::MuxFeynman ? GateKind::Mux : GateKind::Fredkin;
}

std::vector<std::uint32_t> literal_demand(unsigned n,
                                          std::span<const std::uint32_t> minterms) {
  std::vector<std::uint32_t> demand(2 * std::size_t{n}, 0);
  for (std::uint32_t v : minterms) {
    for (unsigned i = 0; i < n; ++i) {
      const bool set = (v >> (n - 1 - i)) & 1u;
      ++demand[2 * std::size_t{i} + (set ? 0 : 1)];
    }
  }
  return demand;
}

LineId LiteralSupply::take(unsigned input, std::uint8_t polarity) {
  const std::size_t s = slot(input, polarity);
  if (s >= pools_.size() || cursors_[s] >= pools_[s].size()) {
    throw CircuitError(DiagnosticKind::ShapeMismatch,
                       "literal pool exhausted for input " + std::to_string(input));
  }
  return pools_[s][cursors_[s]++];
}

std::size_t LiteralSupply::remaining() const {
  std::size_t left = 0;
  for (std::size_t s = 0; s < pools_.size(); ++s) left += pools_[s].size() - cursors_[s];
  return left;
}

namespace {

/// Extends `source` to `count` copies with count-1 copiers; pushes the copies
/// in hand-out order (each copier's second output first, the final
/// pass-through last).
void push_copies(Netlist& netlist, LiteralSupply& supply, unsigned input,
                 std::uint8_t polarity, LineId source, std::uint32_t count,
                 Plane plane) {
  if (count == 0) return;
  LineId head = source;
  for (std::uint32_t k = 1; k < count; ++k) {
    const auto outs = add_role_gate(netlist, copier_role(), {head}, plane);
    head = outs[0];
    supply.push(input, polarity, outs[1]);
  }
  supply.push(input, polarity, head);
}

}  // namespace

LiteralSupply build_literal_supply(Netlist& netlist,
                                   std::span<const std::uint32_t> demand) {
  const unsigned n = netlist.input_count();
  if (demand.size() != 2 * std::size_t{n}) {
    throw CircuitError(DiagnosticKind::ShapeMismatch,
                       "demand vector must have two entries per input");
  }
  LiteralSupply supply(n);
  for (unsigned i = 0; i < n; ++i) {
    const std::uint32_t positive = demand[2 * std::size_t{i}];
    const std::uint32_t negative = demand[2 * std::size_t{i} + 1];
    LineId positive_source = netlist.primary_inputs[i];
    if (negative > 0) {
      // The inverter passes the input through on its first pin, so the
      // positive polarity stays available.
      add_role_gate(netlist, not_role(), {positive_source}, Plane::AndPlane);
      const GateInstance& inverter = netlist.gates.back();
      positive_source = inverter.outputs[0];
      push_copies(netlist, supply, i, 0, inverter.outputs[1], negative,
                  Plane::AndPlane);
    }
    if (positive > 0) {
      push_copies(netlist, supply, i, 1, positive_source, positive, Plane::AndPlane);
    }
  }
  return supply;
}

std::vector<LineId> build_and_plane(Netlist& netlist, LiteralSupply& supply,
                                    std::span<const std::uint32_t> minterms,
                                    GateKind and_kind) {
  const unsigned n = netlist.input_count();
  std::vector<LineId> products;
  products.reserve(minterms.size());
  for (std::uint32_t v : minterms) {
    LineId acc = supply.take(0, static_cast<std::uint8_t>((v >> (n - 1)) & 1u));
    for (unsigned i = 1; i < n; ++i) {
      const auto polarity = static_cast<std::uint8_t>((v >> (n - 1 - i)) & 1u);
      const LineId literal = supply.take(i, polarity);
      acc = add_role_gate(netlist, and_role(and_kind), {acc, literal},
                          Plane::AndPlane)[0];
    }
    products.push_back(acc);
  }
  return products;
}

void build_or_plane(Netlist& netlist, const MintermCover& cover,
                    std::span<const std::uint32_t> minterms,
                    std::span<const LineId> products, GateKind or_kind) {
  if (products.size() != minterms.size()) {
    throw CircuitError(DiagnosticKind::ShapeMismatch,
                       "one product line per minterm expected");
  }
  // copies[k] holds the fan-out of minterms[k], consumed in output order.
  std::vector<std::vector<LineId>> copies(minterms.size());
  std::vector<std::size_t> cursor(minterms.size(), 0);
  for (std::size_t k = 0; k < minterms.size(); ++k) {
    std::uint32_t uses = 0;
    for (unsigned j = 0; j < cover.output_count(); ++j) {
      if (cover.contains(j, minterms[k])) ++uses;
    }
    if (uses == 0) continue;
    LineId head = products[k];
    for (std::uint32_t c = 1; c < uses; ++c) {
      const auto outs = add_role_gate(netlist, copier_role(), {head}, Plane::OrPlane);
      head = outs[0];
      copies[k].push_back(outs[1]);
    }
    copies[k].push_back(head);
  }
  for (unsigned j = 0; j < cover.output_count(); ++j) {
    LineId acc = kNoLine;
    for (std::size_t k = 0; k < minterms.size(); ++k) {
      if (!cover.contains(j, minterms[k])) continue;
      const LineId term = copies[k][cursor[k]++];
      if (acc == kNoLine) {
        acc = term;
      } else {
        acc = add_role_gate(netlist, or_role(or_kind), {acc, term},
                            Plane::OrPlane)[0];
      }
    }
    if (acc == kNoLine) {
      // No minterm feeds this output; route a constant 0 through a copier so
      // the output is gate-driven like every other one.
      const LineId zero = netlist.add_constant(0);
      acc = add_role_gate(netlist, copier_role(), {zero}, Plane::OrPlane)[1];
    }
    netlist.mark_output(acc, j);
  }
}

Netlist synthesize(const PlaSpec& spec, const SynthOptions& options) {
  if (spec.n == 0 || spec.m == 0) {
    throw CircuitError(DiagnosticKind::ShapeMismatch,
                       "synthesis needs at least one input and one output");
  }
  if (spec.n > kMaxSynthInputs) {
    throw CircuitError(DiagnosticKind::CapExceeded,
                       "synthesis supports up to " + std::to_string(kMaxSynthInputs) +
                           " inputs, cover has " + std::to_string(spec.n));
  }
  const MintermCover cover = expand_to_minterms(spec);
  std::vector<std::uint32_t> minterms;
  if (options.full_plane) {
    minterms.resize(std::size_t{1} << spec.n);
    std::iota(minterms.begin(), minterms.end(), 0);
  } else {
    minterms = cover.all_minterms();
  }

  Netlist netlist(spec.n, options.name);
  netlist.input_labels = spec.input_names;
  netlist.output_labels = spec.output_names;

  const std::vector<std::uint32_t> demand = literal_demand(spec.n, minterms);
  LiteralSupply supply = build_literal_supply(netlist, demand);
  const std::vector<LineId> products =
      build_and_plane(netlist, supply, minterms, backend_and_or_kind(options.backend));
  build_or_plane(netlist, cover, minterms, products,
                 backend_and_or_kind(options.backend));

  const std::vector<Diagnostic> findings = validate(netlist);
  if (!findings.empty()) {
    throw CircuitError(DiagnosticKind::InconsistentWiring,
                       "synthesis produced an invalid netlist: " + findings[0].message,
                       findings[0].ids);
  }
  return netlist;
}

}  // namespace rpla
