#include "rpla/pla.hpp"

#include <algorithm>
#include <sstream>

namespace rpla {

bool MintermCover::contains(unsigned output, std::uint32_t minterm) const {
  const auto& set = outputs.at(output);
  return std::binary_search(set.begin(), set.end(), minterm);
}

std::vector<std::uint32_t> MintermCover::all_minterms() const {
  std::vector<std::uint32_t> all;
  for (const auto& set : outputs) all.insert(all.end(), set.begin(), set.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

MintermCover expand_to_minterms(const PlaSpec& spec) {
  MintermCover cover;
  cover.n = spec.n;
  cover.outputs.resize(spec.m);
  for (const Cube& cube : spec.cubes) {
    std::vector<std::uint32_t> dashes;
    std::uint32_t base = 0;
    for (unsigned i = 0; i < spec.n; ++i) {
      const std::uint32_t weight = 1u << (spec.n - 1 - i);
      if (cube.inputs[i] == '1') base |= weight;
      else if (cube.inputs[i] == '-') dashes.push_back(weight);
    }
    for (std::uint32_t d = 0; d < (1u << dashes.size()); ++d) {
      std::uint32_t minterm = base;
      for (std::size_t k = 0; k < dashes.size(); ++k) {
        if ((d >> k) & 1u) minterm |= dashes[k];
      }
      for (unsigned j = 0; j < spec.m; ++j) {
        if (cube.outputs[j] == '1') cover.outputs[j].push_back(minterm);
      }
    }
  }
  for (auto& set : cover.outputs) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
  }
  return cover;
}

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    tokens.push_back(Token{std::string(line.substr(start, i - start)),
                           static_cast<int>(start) + 1});
  }
  return tokens;
}

unsigned parse_count(const Token& token, int line_no, const char* what) {
  unsigned value = 0;
  if (token.text.empty()) {
    throw ParseError(line_no, token.column, std::string(what) + " expects a number");
  }
  for (char c : token.text) {
    if (c < '0' || c > '9') {
      throw ParseError(line_no, token.column,
                       std::string(what) + " expects a number, got '" + token.text + "'");
    }
    value = value * 10 + static_cast<unsigned>(c - '0');
    if (value > 1000000) {
      throw ParseError(line_no, token.column, std::string(what) + " value is out of range");
    }
  }
  return value;
}

}  // namespace

PlaSpec parse_pla(std::string_view text) {
  PlaSpec spec;
  bool have_i = false;
  bool have_o = false;
  bool have_p = false;
  bool ended = false;
  unsigned declared_terms = 0;
  int end_line = 0;

  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    const std::vector<Token> tokens = split_tokens(raw);
    if (tokens.empty()) continue;
    if (ended) {
      throw ParseError(line_no, tokens[0].column,
                       "content after .e (terminated at line " +
                           std::to_string(end_line) + ")");
    }

    const std::string& head = tokens[0].text;
    if (head[0] == '.') {
      if (head == ".i" || head == ".o" || head == ".p") {
        if (tokens.size() != 2) {
          throw ParseError(line_no, tokens[0].column, head + " expects one argument");
        }
        const unsigned value = parse_count(tokens[1], line_no, head.c_str());
        if (head == ".i") {
          if (have_i) throw ParseError(line_no, tokens[0].column, "duplicate .i");
          if (value == 0) throw ParseError(line_no, tokens[1].column, ".i must be at least 1");
          spec.n = value;
          have_i = true;
        } else if (head == ".o") {
          if (have_o) throw ParseError(line_no, tokens[0].column, "duplicate .o");
          if (value == 0) throw ParseError(line_no, tokens[1].column, ".o must be at least 1");
          spec.m = value;
          have_o = true;
        } else {
          if (have_p) throw ParseError(line_no, tokens[0].column, "duplicate .p");
          declared_terms = value;
          have_p = true;
        }
      } else if (head == ".ilb" || head == ".ob") {
        const bool inputs = head == ".ilb";
        if ((inputs && !have_i) || (!inputs && !have_o)) {
          throw ParseError(line_no, tokens[0].column,
                           head + " must come after " + (inputs ? ".i" : ".o"));
        }
        const unsigned expect = inputs ? spec.n : spec.m;
        if (tokens.size() - 1 != expect) {
          throw ParseError(line_no, tokens[0].column,
                           head + " expects " + std::to_string(expect) +
                               " names, got " + std::to_string(tokens.size() - 1));
        }
        auto& names = inputs ? spec.input_names : spec.output_names;
        if (!names.empty()) {
          throw ParseError(line_no, tokens[0].column, "duplicate " + head);
        }
        for (std::size_t k = 1; k < tokens.size(); ++k) names.push_back(tokens[k].text);
      } else if (head == ".e") {
        if (tokens.size() != 1) {
          throw ParseError(line_no, tokens[0].column, ".e takes no arguments");
        }
        ended = true;
        end_line = line_no;
      } else {
        throw ParseError(line_no, tokens[0].column, "unknown directive '" + head + "'");
      }
      continue;
    }

    // body row: <cube> <outputs>
    if (!have_i || !have_o) {
      throw ParseError(line_no, tokens[0].column, "product term before .i/.o header");
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, tokens[0].column,
                       "product term expects an input pattern and an output pattern");
    }
    const Token& in = tokens[0];
    const Token& out = tokens[1];
    if (in.text.size() != spec.n) {
      throw ParseError(line_no, in.column,
                       "input pattern has " + std::to_string(in.text.size()) +
                           " characters, expected " + std::to_string(spec.n));
    }
    if (out.text.size() != spec.m) {
      throw ParseError(line_no, out.column,
                       "output pattern has " + std::to_string(out.text.size()) +
                           " characters, expected " + std::to_string(spec.m));
    }
    for (std::size_t k = 0; k < in.text.size(); ++k) {
      const char c = in.text[k];
      if (c != '0' && c != '1' && c != '-') {
        throw ParseError(line_no, in.column + static_cast<int>(k),
                         std::string("illegal input character '") + c + "'");
      }
    }
    for (std::size_t k = 0; k < out.text.size(); ++k) {
      const char c = out.text[k];
      if (c == '-' || c == '~' || c == '2') {
        throw ParseError(line_no, out.column + static_cast<int>(k),
                         "don't-care outputs are not supported");
      }
      if (c != '0' && c != '1') {
        throw ParseError(line_no, out.column + static_cast<int>(k),
                         std::string("illegal output character '") + c + "'");
      }
    }
    spec.cubes.push_back(Cube{in.text, out.text});
  }

  if (!have_i) throw ParseError(line_no, 0, "missing .i");
  if (!have_o) throw ParseError(line_no, 0, "missing .o");
  if (have_p && declared_terms != spec.cubes.size()) {
    throw ParseError(line_no, 0,
                     ".p declares " + std::to_string(declared_terms) +
                         " terms but the body has " + std::to_string(spec.cubes.size()));
  }
  return spec;
}

std::string print_pla(const PlaSpec& spec) {
  std::ostringstream out;
  out << ".i " << spec.n << "\n";
  out << ".o " << spec.m << "\n";
  if (!spec.input_names.empty()) {
    out << ".ilb";
    for (const std::string& name : spec.input_names) out << ' ' << name;
    out << "\n";
  }
  if (!spec.output_names.empty()) {
    out << ".ob";
    for (const std::string& name : spec.output_names) out << ' ' << name;
    out << "\n";
  }
  out << ".p " << spec.cubes.size() << "\n";
  for (const Cube& cube : spec.cubes) {
    out << cube.inputs << ' ' << cube.outputs << "\n";
  }
  out << ".e\n";
  return out.str();
}

}  // namespace rpla
