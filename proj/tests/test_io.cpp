#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "rpla/cost.hpp"
#include "rpla/dot.hpp"
#include "rpla/errors.hpp"
#include "rpla/netlist_io.hpp"
#include "rpla/pla.hpp"
#include "rpla/simulate.hpp"
#include "rpla/synthesize.hpp"

#include "helpers.hpp"

using namespace rpla;

namespace {

Netlist parity_netlist(Backend backend = Backend::MuxFeynman) {
  const PlaSpec spec = parse_pla(
      ".i 3\n.o 1\n.ilb a b c\n.ob odd\n"
      "001 1\n010 1\n100 1\n111 1\n"
      ".e\n");
  SynthOptions options;
  options.backend = backend;
  options.name = "parity";
  return synthesize(spec, options);
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

void expect_parse_failure(const std::string& document, const std::string& needle) {
  try {
    deserialize_netlist(document);
    FAIL_CHECK("expected a ParseError for: ", needle);
  } catch (const ParseError& e) {
    CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos,
                  "got instead: ", e.what());
  }
}

}  // namespace

TEST_CASE("serialize then deserialize preserves structure and behavior") {
  for (Backend backend : {Backend::MuxFeynman, Backend::FredkinFeynman}) {
    const Netlist original = parity_netlist(backend);
    const std::string document = serialize_netlist(original);
    const Netlist restored = deserialize_netlist(document);

    CHECK(validate(restored).empty());
    CHECK(restored.name == original.name);
    CHECK(restored.input_labels == std::vector<std::string>{"a", "b", "c"});
    CHECK(restored.output_labels == std::vector<std::string>{"odd"});
    CHECK(truth_table(restored) == truth_table(original));
    CHECK(cost_report(restored) == cost_report(original));
    CHECK(cost_report(restored, Plane::AndPlane) == cost_report(original, Plane::AndPlane));
    CHECK(cost_report(restored, Plane::OrPlane) == cost_report(original, Plane::OrPlane));
  }
}

TEST_CASE("serialization is deterministic and round-trip stable") {
  const Netlist netlist = parity_netlist();
  const std::string first = serialize_netlist(netlist);
  CHECK(first == serialize_netlist(netlist));
  const std::string second = serialize_netlist(deserialize_netlist(first));
  CHECK(first == second);
}

TEST_CASE("hand-built netlists round trip too") {
  Netlist netlist(2, "hand");
  const auto copies = add_role_gate(netlist, copier_role(), {netlist.primary_inputs[0]});
  const auto prod = add_role_gate(netlist, and_role(GateKind::Fredkin),
                                  {copies[0], netlist.primary_inputs[1]});
  netlist.mark_output(prod[0], 0);
  netlist.mark_output(copies[1], 1);

  const Netlist restored = deserialize_netlist(serialize_netlist(netlist));
  CHECK(truth_table(restored) == truth_table(netlist));
  CHECK(restored.gates.size() == 2);
  CHECK(restored.gates[1].kind == GateKind::Fredkin);
  CHECK(restored.gates[0].role == RoleName::Copier);
  CHECK(restored.gates[0].plane == Plane::None);
}

TEST_CASE("an input-only netlist round trips") {
  Netlist netlist(2, "wires");
  netlist.mark_output(netlist.primary_inputs[1], 0);
  netlist.mark_output(netlist.primary_inputs[0], 1);
  const Netlist restored = deserialize_netlist(serialize_netlist(netlist));
  CHECK(restored.gates.empty());
  CHECK(restored.primary_outputs == std::vector<LineId>{1, 0});
}

TEST_CASE("malformed documents are rejected with a reason") {
  const std::string good = serialize_netlist(parity_netlist());

  SUBCASE("not JSON at all") { expect_parse_failure("]{", "invalid JSON"); }
  SUBCASE("wrong format tag") {
    std::string doc = good;
    const auto pos = doc.find("rpla-netlist");
    doc.replace(pos, std::string("rpla-netlist").size(), "someone-else");
    expect_parse_failure(doc, "unrecognized format");
  }
  SUBCASE("wrong version") {
    std::string doc = good;
    const auto pos = doc.find("\"version\": 1");
    doc.replace(pos, std::string("\"version\": 1").size(), "\"version\": 9");
    expect_parse_failure(doc, "unsupported version");
  }
  SUBCASE("missing field") {
    expect_parse_failure(R"({"format": "rpla-netlist", "version": 1})", "missing field");
  }
  SUBCASE("unknown gate kind") {
    std::string doc = good;
    const auto pos = doc.find("\"feynman\"");
    doc.replace(pos, 9, "\"toffoli\"");
    expect_parse_failure(doc, "unknown gate kind");
  }
  SUBCASE("gate reads a line that does not exist") {
    const std::string doc = R"({
      "format": "rpla-netlist", "version": 1, "name": "bad",
      "inputs": ["x0", "x1"], "outputs": ["y0"],
      "constants": [],
      "gates": [{"id": 0, "kind": "feynman", "role": "raw",
                 "inputs": [0, 7], "outputs": [2, 3]}],
      "primary_outputs": [{"index": 0, "line": 3}]
    })";
    expect_parse_failure(doc, "violates netlist rules");
  }
  SUBCASE("two gates reading one line") {
    const std::string doc = R"({
      "format": "rpla-netlist", "version": 1, "name": "bad",
      "inputs": ["x0", "x1"], "outputs": ["y0"],
      "constants": [],
      "gates": [
        {"id": 0, "kind": "feynman", "role": "raw", "inputs": [0, 1], "outputs": [2, 3]},
        {"id": 1, "kind": "feynman", "role": "raw", "inputs": [0, 3], "outputs": [4, 5]}
      ],
      "primary_outputs": [{"index": 0, "line": 5}]
    })";
    expect_parse_failure(doc, "violates netlist rules");
  }
  SUBCASE("gate ids out of order") {
    const std::string doc = R"({
      "format": "rpla-netlist", "version": 1, "name": "bad",
      "inputs": ["x0", "x1"], "outputs": ["y0"],
      "constants": [],
      "gates": [{"id": 1, "kind": "feynman", "role": "raw",
                 "inputs": [0, 1], "outputs": [2, 3]}],
      "primary_outputs": [{"index": 0, "line": 3}]
    })";
    expect_parse_failure(doc, "dense and ascending");
  }
  SUBCASE("output lines that skip ids") {
    const std::string doc = R"({
      "format": "rpla-netlist", "version": 1, "name": "bad",
      "inputs": ["x0", "x1"], "outputs": ["y0"],
      "constants": [],
      "gates": [{"id": 0, "kind": "feynman", "role": "raw",
                 "inputs": [0, 1], "outputs": [3, 4]}],
      "primary_outputs": [{"index": 0, "line": 4}]
    })";
    expect_parse_failure(doc, "creation order");
  }
  SUBCASE("constant on a line creation never reaches") {
    const std::string doc = R"({
      "format": "rpla-netlist", "version": 1, "name": "bad",
      "inputs": ["x0"], "outputs": ["y0"],
      "constants": [{"line": 5, "bit": 0}],
      "gates": [],
      "primary_outputs": [{"index": 0, "line": 0}]
    })";
    expect_parse_failure(doc, "creation order");
  }
  SUBCASE("output index out of range") {
    const std::string doc = R"({
      "format": "rpla-netlist", "version": 1, "name": "bad",
      "inputs": ["x0"], "outputs": ["y0"],
      "constants": [],
      "gates": [],
      "primary_outputs": [{"index": 3, "line": 0}]
    })";
    expect_parse_failure(doc, "out of range");
  }
  SUBCASE("unmarked output slot") {
    const std::string doc = R"({
      "format": "rpla-netlist", "version": 1, "name": "bad",
      "inputs": ["x0"], "outputs": ["y0"],
      "constants": [],
      "gates": [],
      "primary_outputs": []
    })";
    expect_parse_failure(doc, "fails validation");
  }
}

TEST_CASE("dot output shape for a single and gate") {
  Netlist netlist(2, "and");
  const auto out = add_role_gate(netlist, and_role(GateKind::Mux),
                                 {netlist.primary_inputs[0], netlist.primary_inputs[1]});
  netlist.mark_output(out[0], 0);

  const std::string dot = emit_dot(netlist);
  CHECK(dot == emit_dot(netlist));  // deterministic
  CHECK(count_occurrences(dot, "shape=") == 6);  // 2 inputs, constant, gate, output, sink
  CHECK(count_occurrences(dot, " -> ") == 6);    // one edge per line
  CHECK(count_occurrences(dot, "shape=box") == 1);
  CHECK(dot.find("mux/and") != std::string::npos);
  CHECK(dot.find("digraph \"and\"") == 0);
}

TEST_CASE("dot output for a gate-free netlist") {
  const Netlist netlist(2, "bare");
  const std::string dot = emit_dot(netlist);
  CHECK(count_occurrences(dot, "shape=plaintext") == 2);
  CHECK(count_occurrences(dot, "shape=box") == 0);
  CHECK(count_occurrences(dot, " -> ") == 2);  // both inputs flow to the sink
  CHECK(dot.find("unconsumed") != std::string::npos);
}

TEST_CASE("dot escapes quotes in names") {
  Netlist netlist(1, "a\"b");
  const std::string dot = emit_dot(netlist);
  CHECK(dot.find("digraph \"a\\\"b\"") == 0);
}
