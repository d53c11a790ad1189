#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rpla/errors.hpp"

namespace rpla {

/// One product term: an input pattern over {0,1,-} and the outputs it feeds.
struct Cube {
  std::string inputs;   // length n, characters 0 1 -
  std::string outputs;  // length m, characters 0 1

  friend bool operator==(const Cube&, const Cube&) = default;
};

/// Parsed two-level sum-of-products description.
struct PlaSpec {
  unsigned n = 0;
  unsigned m = 0;
  std::vector<Cube> cubes;
  std::vector<std::string> input_names;   // empty when the source had no .ilb
  std::vector<std::string> output_names;  // empty when the source had no .ob

  friend bool operator==(const PlaSpec&, const PlaSpec&) = default;
};

/// Canonical expansion of a PlaSpec: per output, the sorted set of minterm
/// indices where it is 1. Input 0 is the most significant bit of an index.
struct MintermCover {
  unsigned n = 0;
  std::vector<std::vector<std::uint32_t>> outputs;  // sorted, deduplicated

  unsigned output_count() const { return static_cast<unsigned>(outputs.size()); }
  bool contains(unsigned output, std::uint32_t minterm) const;

  /// Sorted union of all outputs' minterm sets.
  std::vector<std::uint32_t> all_minterms() const;
};

/// Expands every cube over its '-' positions; a minterm lands in output j's
/// set iff some cube with output bit j = 1 covers it.
MintermCover expand_to_minterms(const PlaSpec& spec);

/// Accepted grammar: `.i N`, `.o M`, optional `.p K`, optional `.ilb`/`.ob`
/// label lines, body rows `<cube> <outputs>`, optional `.e` terminator.
/// `#` starts a comment; blank lines are ignored. Anything else is a
/// ParseError carrying the offending line number.
PlaSpec parse_pla(std::string_view text);

/// Canonical text form; parse_pla(print_pla(s)) == s.
std::string print_pla(const PlaSpec& spec);

}  // namespace rpla
