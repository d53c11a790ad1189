#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rpla/gates.hpp"
#include "rpla/netlist.hpp"
#include "rpla/pla.hpp"

namespace rpla {

// One bit per line or per boundary position, 0 or 1.
using Assignment = std::vector<std::uint8_t>;

struct EvalStats {
  std::uint64_t gates_evaluated = 0;
};

// Per-line values after propagating the given primary-input bits.
// constant_overrides, when non-empty, replaces the declared constant bits
// positionally (same length as netlist.constant_lines).
Assignment evaluate(const Netlist& netlist, const Bits& inputs,
                    const Bits& constant_overrides = {},
                    EvalStats* stats = nullptr);

// Bits observed at the primary outputs for the given primary-input bits.
Bits evaluate_outputs(const Netlist& netlist, const Bits& inputs,
                      const Bits& constant_overrides = {});

struct TruthTable {
  unsigned n = 0;
  unsigned m = 0;
  // rows[v] bit j (1ull << j) is output j on input v.
  std::vector<std::uint64_t> rows;

  bool operator==(const TruthTable&) const = default;
};

inline constexpr unsigned kDefaultTableCap = 16;

// Exhaustive table over the primary inputs; throws CircuitError(CapExceeded)
// when the input count is above cap.
TruthTable truth_table(const Netlist& netlist, unsigned cap = kDefaultTableCap);

// Boundary of the reverse direction: primary outputs in index order, then
// every unconsumed line in ascending line id.
std::vector<LineId> output_boundary(const Netlist& netlist);

// Reconstruct the input-side values (primary inputs, then constant lines)
// from a full output-side boundary assignment. Requires a feedback-free
// netlist built from reversible gates, which makes the map invertible.
Assignment inverse_evaluate(const Netlist& netlist, const Bits& boundary_outputs);

enum class BijectivityMode { Exhaustive, Sampled };

struct BijectivityOptions {
  // Exhaustive check when #inputs + #constants fits in this many bits.
  unsigned exhaustive_cap = 20;
  // Sampled mode: number of random constant overrides exercised per fiber.
  unsigned samples = 1000;
  std::uint64_t seed = 0x5eed5eedull;
};

struct BijectivityCheck {
  bool bijective = false;
  BijectivityMode mode = BijectivityMode::Exhaustive;
  // Two distinct input-side assignments with equal boundary images, when found.
  std::optional<std::pair<Bits, Bits>> collision;
};

// Checks that (primary inputs, constants) -> output boundary is a bijection.
BijectivityCheck check_circuit_bijective(const Netlist& netlist,
                                         const BijectivityOptions& options = {});

struct EquivalenceCheck {
  bool equivalent = false;
  Bits mismatch_input;
  Bits got;
  Bits expected;
};

// Compares the netlist's primary outputs against a minterm cover, exhaustively.
EquivalenceCheck check_equivalence(const Netlist& netlist, const MintermCover& cover,
                                   unsigned cap = kDefaultTableCap);

namespace detail {

// Injectivity of (primary inputs, constants) -> the given boundary lines.
// Exposed so tests can hand in a deliberately truncated boundary.
BijectivityCheck check_injective(const Netlist& netlist,
                                 const std::vector<LineId>& boundary,
                                 const BijectivityOptions& options);

}  // namespace detail

}  // namespace rpla
