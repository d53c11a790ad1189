#pragma once

#include <string>
#include <string_view>

#include "rpla/netlist.hpp"

namespace rpla {

inline constexpr std::string_view kNetlistFormatName = "rpla-netlist";
inline constexpr int kNetlistFormatVersion = 1;

/// Canonical JSON document for a netlist. Deterministic: the same netlist
/// always serializes to the same bytes.
std::string serialize_netlist(const Netlist& netlist);

/// Rebuilds a netlist through the normal builder calls, so every structural
/// rule is re-enforced; malformed documents raise ParseError.
Netlist deserialize_netlist(std::string_view text);

}  // namespace rpla
