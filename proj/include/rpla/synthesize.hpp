#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rpla/netlist.hpp"
#include "rpla/pla.hpp"

namespace rpla {

/// Which gate family realizes the AND and OR roles. Literal preparation uses
/// Feynman gates in both.
enum class Backend : std::uint8_t { MuxFeynman, FredkinFeynman };

std::string_view backend_name(Backend backend);      // "mux+feynman"
std::string_view backend_cli_name(Backend backend);  // "mux"
std::optional<Backend> backend_from_name(std::string_view name);
GateKind backend_and_or_kind(Backend backend);

struct SynthOptions {
  Backend backend = Backend::MuxFeynman;
  // Realize every minterm over n inputs, not just those a cube covers.
  bool full_plane = false;
  std::string name = "rpla";
};

/// How many copies of each literal the AND plane will consume. Index 2i is
/// input i itself, 2i+1 its complement.
std::vector<std::uint32_t> literal_demand(unsigned n,
                                          std::span<const std::uint32_t> minterms);

/// Lines carrying prepared literal copies, handed out in creation order.
class LiteralSupply {
public:
  LiteralSupply(unsigned n) : pools_(2 * std::size_t{n}), cursors_(2 * std::size_t{n}, 0) {}

  void push(unsigned input, std::uint8_t polarity, LineId id) {
    pools_[slot(input, polarity)].push_back(id);
  }

  /// Next unused copy of input (polarity 1) or its complement (polarity 0).
  LineId take(unsigned input, std::uint8_t polarity);

  std::size_t remaining() const;

private:
  std::size_t slot(unsigned input, std::uint8_t polarity) const {
    return 2 * std::size_t{input} + (polarity ? 0 : 1);
  }

  std::vector<std::vector<LineId>> pools_;
  std::vector<std::size_t> cursors_;
};

/// Builds the Feynman fabric that turns each primary input into the demanded
/// number of literal copies: one inverter when the complement is demanded,
/// then copier chains for each polarity.
LiteralSupply build_literal_supply(Netlist& netlist,
                                   std::span<const std::uint32_t> demand);

/// One left-associative AND chain per minterm (ascending); returns the
/// product line for each, parallel to `minterms`.
std::vector<LineId> build_and_plane(Netlist& netlist, LiteralSupply& supply,
                                    std::span<const std::uint32_t> minterms,
                                    GateKind and_kind);

/// Fans shared product terms out with copiers, then ORs each output's share
/// together (left-associative, ascending minterm order) and marks the primary
/// outputs. An output covering no minterm is pinned to 0 through a copier.
void build_or_plane(Netlist& netlist, const MintermCover& cover,
                    std::span<const std::uint32_t> minterms,
                    std::span<const LineId> products, GateKind or_kind);

/// Full pipeline: expand, prepare literals, AND plane, OR plane, validate.
Netlist synthesize(const PlaSpec& spec, const SynthOptions& options = {});

inline constexpr unsigned kMaxSynthInputs = 16;

}  // namespace rpla
