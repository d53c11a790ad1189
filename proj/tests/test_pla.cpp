#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "rpla/errors.hpp"
#include "rpla/pla.hpp"

using namespace rpla;

namespace {

/// Parses text that must fail, returning the reported position.
std::pair<int, std::string> parse_failure(const std::string& text) {
  try {
    parse_pla(text);
  } catch (const ParseError& e) {
    return {e.line(), e.what()};
  }
  FAIL("expected a ParseError");
  return {0, ""};
}

bool mentions(const std::string& message, const std::string& needle) {
  return message.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("a minimal file parses") {
  const PlaSpec spec = parse_pla(".i 2\n.o 1\n.p 1\n1- 1\n.e\n");
  CHECK(spec.n == 2);
  CHECK(spec.m == 1);
  CHECK(spec.cubes == std::vector<Cube>{{"1-", "1"}});
  CHECK(spec.input_names.empty());
  CHECK(spec.output_names.empty());
}

TEST_CASE("labels, comments, blank lines, and a missing .e are all fine") {
  const std::string text =
      "# adder slice\n"
      ".i 2\n"
      ".o 2\n"
      ".ilb a b   # operand bits\n"
      ".ob sum carry\n"
      "\n"
      "01 10\n"
      "10 10\n"
      "11 01\n";
  const PlaSpec spec = parse_pla(text);
  CHECK(spec.input_names == std::vector<std::string>{"a", "b"});
  CHECK(spec.output_names == std::vector<std::string>{"sum", "carry"});
  CHECK(spec.cubes.size() == 3);
}

TEST_CASE("dash expansion lands on the right minterms") {
  // input 0 is the most significant index bit
  const PlaSpec spec = parse_pla(".i 3\n.o 1\n1-0 1\n.e\n");
  const MintermCover cover = expand_to_minterms(spec);
  REQUIRE(cover.output_count() == 1);
  CHECK(cover.outputs[0] == std::vector<std::uint32_t>{4, 6});
  CHECK(cover.contains(0, 4));
  CHECK(cover.contains(0, 6));
  CHECK_FALSE(cover.contains(0, 5));
}

TEST_CASE("expansion deduplicates overlapping cubes and splits outputs") {
  const PlaSpec spec = parse_pla(
      ".i 2\n.o 2\n"
      "1- 10\n"
      "-1 11\n"
      ".e\n");
  const MintermCover cover = expand_to_minterms(spec);
  CHECK(cover.outputs[0] == std::vector<std::uint32_t>{1, 2, 3});
  CHECK(cover.outputs[1] == std::vector<std::uint32_t>{1, 3});
  CHECK(cover.all_minterms() == std::vector<std::uint32_t>{1, 2, 3});

  const PlaSpec all = parse_pla(".i 2\n.o 1\n-- 1\n.e\n");
  CHECK(expand_to_minterms(all).outputs[0] == std::vector<std::uint32_t>{0, 1, 2, 3});
}

TEST_CASE("an output can cover nothing") {
  const PlaSpec spec = parse_pla(".i 2\n.o 2\n11 10\n.e\n");
  const MintermCover cover = expand_to_minterms(spec);
  CHECK(cover.outputs[0] == std::vector<std::uint32_t>{3});
  CHECK(cover.outputs[1].empty());
}

TEST_CASE("print then parse is the identity") {
  PlaSpec spec;
  spec.n = 3;
  spec.m = 2;
  spec.cubes = {{"1-0", "10"}, {"011", "11"}};
  SUBCASE("without labels") { CHECK(parse_pla(print_pla(spec)) == spec); }
  SUBCASE("with labels") {
    spec.input_names = {"a", "b", "c"};
    spec.output_names = {"f", "g"};
    CHECK(parse_pla(print_pla(spec)) == spec);
  }
}

TEST_CASE("the printed form is canonical") {
  PlaSpec spec;
  spec.n = 2;
  spec.m = 1;
  spec.cubes = {{"1-", "1"}};
  spec.input_names = {"a", "b"};
  spec.output_names = {"f"};
  CHECK(print_pla(spec) == ".i 2\n.o 1\n.ilb a b\n.ob f\n.p 1\n1- 1\n.e\n");
}

TEST_CASE("errors carry 1-based line numbers") {
  SUBCASE("body row before the header") {
    const auto [line, message] = parse_failure(".o 1\n1 1\n");
    CHECK(line == 2);
    CHECK(mentions(message, "before .i/.o"));
  }
  SUBCASE("input pattern width") {
    const auto [line, message] = parse_failure(".i 2\n.o 1\n111 1\n.e\n");
    CHECK(line == 3);
    CHECK(mentions(message, "expected 2"));
  }
  SUBCASE("output pattern width") {
    const auto [line, message] = parse_failure(".i 2\n.o 2\n11 1\n.e\n");
    CHECK(line == 3);
    (void)message;
  }
  SUBCASE("illegal input character") {
    const auto [line, message] = parse_failure(".i 1\n.o 1\n2 1\n.e\n");
    CHECK(line == 3);
    CHECK(mentions(message, "illegal input character"));
  }
  SUBCASE("don't-care outputs are rejected") {
    const auto [line, message] = parse_failure(".i 1\n.o 1\n1 -\n.e\n");
    CHECK(line == 3);
    CHECK(mentions(message, "don't-care"));
  }
  SUBCASE("term count mismatch") {
    const auto [line, message] = parse_failure(".i 1\n.o 1\n.p 2\n1 1\n.e\n");
    CHECK(mentions(message, ".p declares 2"));
    (void)line;
  }
  SUBCASE("duplicate .i") {
    const auto [line, message] = parse_failure(".i 1\n.i 1\n.o 1\n1 1\n.e\n");
    CHECK(line == 2);
    CHECK(mentions(message, "duplicate .i"));
  }
  SUBCASE("content after .e") {
    const auto [line, message] = parse_failure(".i 1\n.o 1\n1 1\n.e\n0 0\n");
    CHECK(line == 5);
    CHECK(mentions(message, "after .e"));
  }
  SUBCASE("unknown directive") {
    const auto [line, message] = parse_failure(".i 1\n.o 1\n.type fr\n1 1\n.e\n");
    CHECK(line == 3);
    CHECK(mentions(message, "unknown directive"));
  }
  SUBCASE(".ilb with the wrong arity") {
    const auto [line, message] = parse_failure(".i 2\n.o 1\n.ilb a\n11 1\n.e\n");
    CHECK(line == 3);
    CHECK(mentions(message, "expects 2 names"));
  }
  SUBCASE(".ob before .o") {
    const auto [line, message] = parse_failure(".i 1\n.ob f\n.o 1\n1 1\n.e\n");
    CHECK(line == 2);
    CHECK(mentions(message, "must come after"));
  }
  SUBCASE("a row with too many fields") {
    const auto [line, message] = parse_failure(".i 1\n.o 1\n1 1 1\n.e\n");
    CHECK(line == 3);
    (void)message;
  }
  SUBCASE(".i with a non-numeric argument") {
    const auto [line, message] = parse_failure(".i two\n.o 1\n.e\n");
    CHECK(line == 1);
    CHECK(mentions(message, "expects a number"));
  }
  SUBCASE("missing .i entirely") {
    const auto [line, message] = parse_failure(".o 1\n.e\n");
    CHECK(mentions(message, "missing .i"));
    (void)line;
  }
  SUBCASE("missing .o entirely") {
    const auto [line, message] = parse_failure(".i 1\n.e\n");
    CHECK(mentions(message, "missing .o"));
    (void)line;
  }
  SUBCASE("zero inputs are rejected") {
    const auto [line, message] = parse_failure(".i 0\n.o 1\n.e\n");
    CHECK(line == 1);
    (void)message;
  }
}

TEST_CASE("column positions point at the offending token") {
  try {
    parse_pla(".i 2\n.o 1\n1- x\n.e\n");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 4);
  }
}
