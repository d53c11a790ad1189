#pragma once

#include <string>

#include "rpla/netlist.hpp"

namespace rpla {

/// Graphviz rendering: one node per primary input, constant, gate, and
/// primary output, plus a single shared sink for unread lines; one edge per
/// line, in ascending line-id order. Output is deterministic.
std::string emit_dot(const Netlist& netlist);

}  // namespace rpla
