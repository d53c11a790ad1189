#pragma once

#include <string>

#include "rpla/cost.hpp"

namespace rpla {

/// Human-readable metrics for one netlist; includes per-plane rows when the
/// netlist carries plane tags.
std::string render_cost_text(const Netlist& netlist);

/// Same content as JSON (stable key order, 2-space indent, trailing newline).
std::string render_cost_json(const Netlist& netlist);

/// Side-by-side backend table. Deltas are existing minus proposed, so a
/// positive delta means the proposed backend is cheaper.
std::string render_comparison_text(const ComparisonTable& table);

std::string render_comparison_json(const ComparisonTable& table);

}  // namespace rpla
