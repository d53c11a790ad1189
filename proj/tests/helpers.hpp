#pragma once

#include <string_view>

#include <doctest.h>

#include "rpla/errors.hpp"
#include "rpla/gates.hpp"

namespace rpla::testing {

/// Runs `fn`, requiring it to throw a CircuitError of the given kind.
template <typename Fn>
void expect_circuit_error(DiagnosticKind kind, Fn&& fn) {
  try {
    fn();
    FAIL_CHECK("expected a CircuitError, nothing was thrown");
  } catch (const CircuitError& e) {
    CHECK_MESSAGE(e.kind() == kind, "unexpected error: ", e.what());
  }
}

inline Bits bits(std::string_view text) {
  Bits out;
  out.reserve(text.size());
  for (char c : text) out.push_back(c == '1' ? 1 : 0);
  return out;
}

}  // namespace rpla::testing
