#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <vector>

#include "rpla/errors.hpp"
#include "rpla/gates.hpp"

#include "helpers.hpp"

using namespace rpla;
using rpla::testing::bits;
using rpla::testing::expect_circuit_error;

namespace {

constexpr std::array<GateKind, kGateKindCount> kAllKinds = {
    GateKind::Feynman, GateKind::Fredkin, GateKind::Mux};

// Second opinion on the gate semantics, phrased with selects and swaps
// instead of the xor/and algebra the library uses.
Bits reference_outputs(GateKind kind, const Bits& in) {
  const bool a = in[0] != 0;
  switch (kind) {
    case GateKind::Feynman:
      return {in[0], static_cast<std::uint8_t>(in[0] != in[1] ? 1 : 0)};
    case GateKind::Fredkin:
      // controlled swap of the last two pins
      return a ? Bits{in[0], in[2], in[1]} : Bits{in[0], in[1], in[2]};
    case GateKind::Mux: {
      const std::uint8_t parity =
          static_cast<std::uint8_t>((in[0] + in[1] + in[2]) % 2);
      const std::uint8_t selected = a ? in[1] : in[2];
      return {in[0], parity, selected};
    }
  }
  return {};
}

}  // namespace

TEST_CASE("permutation tables are the hand-derived ones") {
  const std::array<std::uint8_t, 4> feynman = {0, 1, 3, 2};
  const std::array<std::uint8_t, 8> fredkin = {0, 1, 2, 3, 4, 6, 5, 7};
  const std::array<std::uint8_t, 8> mux = {0, 3, 2, 1, 6, 4, 5, 7};

  const GateSpec& fe = gate_spec(GateKind::Feynman);
  REQUIRE(fe.width == 2);
  for (unsigned v = 0; v < 4; ++v) CHECK(fe.perm[v] == feynman[v]);

  const GateSpec& fr = gate_spec(GateKind::Fredkin);
  REQUIRE(fr.width == 3);
  for (unsigned v = 0; v < 8; ++v) CHECK(fr.perm[v] == fredkin[v]);

  const GateSpec& mx = gate_spec(GateKind::Mux);
  REQUIRE(mx.width == 3);
  for (unsigned v = 0; v < 8; ++v) CHECK(mx.perm[v] == mux[v]);
}

TEST_CASE("eval_gate agrees with an independent semantic model") {
  for (GateKind kind : kAllKinds) {
    const GateSpec& spec = gate_spec(kind);
    for (unsigned v = 0; v < spec.table_size(); ++v) {
      const Bits in = decode_bits(v, spec.width);
      CHECK(eval_gate(spec, in) == reference_outputs(kind, in));
    }
  }
}

TEST_CASE("every gate is a bijection and inverts cleanly") {
  for (GateKind kind : kAllKinds) {
    const GateSpec& spec = gate_spec(kind);
    CHECK(is_reversible({spec.perm.data(), spec.table_size()}));
    for (unsigned v = 0; v < spec.table_size(); ++v) {
      const Bits in = decode_bits(v, spec.width);
      CHECK(invert_gate(spec, eval_gate(spec, in)) == in);
    }
  }
}

TEST_CASE("the first pin always passes through") {
  for (GateKind kind : kAllKinds) {
    const GateSpec& spec = gate_spec(kind);
    for (unsigned v = 0; v < spec.table_size(); ++v) {
      const Bits in = decode_bits(v, spec.width);
      CHECK(eval_gate(spec, in)[0] == in[0]);
    }
  }
}

TEST_CASE("conservativity: fredkin preserves weight, the others do not") {
  const GateSpec& fr = gate_spec(GateKind::Fredkin);
  CHECK(is_conservative({fr.perm.data(), fr.table_size()}));
  CHECK_FALSE(find_nonconservative_input({fr.perm.data(), fr.table_size()}).has_value());

  const GateSpec& mx = gate_spec(GateKind::Mux);
  CHECK_FALSE(is_conservative({mx.perm.data(), mx.table_size()}));
  const auto witness = find_nonconservative_input({mx.perm.data(), mx.table_size()});
  REQUIRE(witness.has_value());
  CHECK(*witness == 1);  // first violation: (0,0,1) maps to (0,1,1)
  CHECK(eval_gate(mx, bits("001")) == bits("011"));
  // another weight-changing pair, one bit in and two bits out
  CHECK(eval_gate(mx, bits("100")) == bits("110"));

  const GateSpec& fe = gate_spec(GateKind::Feynman);
  CHECK_FALSE(is_conservative({fe.perm.data(), fe.table_size()}));
  const auto fe_witness = find_nonconservative_input({fe.perm.data(), fe.table_size()});
  REQUIRE(fe_witness.has_value());
  CHECK(*fe_witness == 2);  // (1,0) maps to (1,1)
}

TEST_CASE("quantum cost and operator signatures") {
  CHECK(gate_spec(GateKind::Feynman).quantum_cost == 1);
  CHECK(gate_spec(GateKind::Fredkin).quantum_cost == 5);
  CHECK(gate_spec(GateKind::Mux).quantum_cost == 4);

  CHECK(gate_spec(GateKind::Feynman).logic_signature == LogicCalc{1, 0, 0});
  CHECK(gate_spec(GateKind::Fredkin).logic_signature == LogicCalc{2, 4, 2});
  CHECK(gate_spec(GateKind::Mux).logic_signature == LogicCalc{3, 2, 1});
}

TEST_CASE("LogicCalc arithmetic") {
  const LogicCalc a{1, 2, 3};
  const LogicCalc b{10, 20, 30};
  CHECK(a + b == LogicCalc{11, 22, 33});
  CHECK(5 * a == LogicCalc{5, 10, 15});
  LogicCalc c = a;
  c += b;
  CHECK(c == LogicCalc{11, 22, 33});
}

TEST_CASE("roles compute the intended boolean functions") {
  SUBCASE("copier duplicates its input") {
    for (std::uint8_t x : {0, 1}) {
      const Bits out = apply_role(copier_role(), Bits{x});
      REQUIRE(out.size() == 2);
      CHECK(out[0] == x);
      CHECK(out[1] == x);
    }
  }
  SUBCASE("not complements its input") {
    for (std::uint8_t x : {0, 1}) {
      const Bits out = apply_role(not_role(), Bits{x});
      REQUIRE(out.size() == 1);
      CHECK(out[0] == (x ^ 1));
    }
  }
  SUBCASE("and multiplies, on either base") {
    for (GateKind base : {GateKind::Mux, GateKind::Fredkin}) {
      for (std::uint8_t a : {0, 1}) {
        for (std::uint8_t b : {0, 1}) {
          const Bits out = apply_role(and_role(base), Bits{a, b});
          REQUIRE(out.size() == 1);
          CHECK(out[0] == (a & b));
        }
      }
    }
  }
  SUBCASE("or saturates, on either base") {
    for (GateKind base : {GateKind::Mux, GateKind::Fredkin}) {
      for (std::uint8_t a : {0, 1}) {
        for (std::uint8_t c : {0, 1}) {
          const Bits out = apply_role(or_role(base), Bits{a, c});
          REQUIRE(out.size() == 1);
          CHECK(out[0] == (a | c));
        }
      }
    }
  }
}

TEST_CASE("role and width contract violations throw") {
  expect_circuit_error(DiagnosticKind::WidthMismatch,
                       [] { and_role(GateKind::Feynman); });
  expect_circuit_error(DiagnosticKind::WidthMismatch,
                       [] { or_role(GateKind::Feynman); });
  expect_circuit_error(DiagnosticKind::WidthMismatch, [] {
    apply_role(copier_role(), Bits{0, 1});
  });
  expect_circuit_error(DiagnosticKind::WidthMismatch, [] {
    eval_gate(gate_spec(GateKind::Mux), Bits{0, 1});
  });
  expect_circuit_error(DiagnosticKind::WidthMismatch, [] {
    invert_gate(gate_spec(GateKind::Feynman), Bits{0, 1, 0});
  });
}

TEST_CASE("bit packing round trips with pin 0 as the high bit") {
  CHECK(encode_bits(bits("10")) == 2);
  CHECK(encode_bits(bits("011")) == 3);
  CHECK(decode_bits(5, 3) == bits("101"));
  for (unsigned width : {2u, 3u}) {
    for (unsigned v = 0; v < (1u << width); ++v) {
      CHECK(encode_bits(decode_bits(v, width)) == v);
    }
  }
}

TEST_CASE("kind names round trip and specs are cached") {
  for (GateKind kind : kAllKinds) {
    CHECK(gate_kind_from_name(gate_kind_name(kind)) == kind);
    CHECK(&gate_spec(kind) == &gate_spec(kind));
    CHECK(gate_spec(kind).width == gate_width(kind));
  }
  CHECK_FALSE(gate_kind_from_name("toffoli").has_value());
  for (RoleName role : {RoleName::Copier, RoleName::Not, RoleName::And, RoleName::Or,
                        RoleName::Raw}) {
    CHECK(role_from_string(role_name_string(role)) == role);
  }
  CHECK_FALSE(role_from_string("buffer").has_value());
}
