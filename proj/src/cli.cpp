#include "rpla/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rpla/cost.hpp"
#include "rpla/dot.hpp"
#include "rpla/errors.hpp"
#include "rpla/netlist_io.hpp"
#include "rpla/pla.hpp"
#include "rpla/report.hpp"
#include "rpla/simulate.hpp"
#include "rpla/synthesize.hpp"

namespace rpla {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::string file_stem(const std::string& path) {
  const std::string stem = std::filesystem::path(path).stem().string();
  return stem.empty() ? "netlist" : stem;
}

Netlist load_netlist(const std::string& path) {
  return deserialize_netlist(read_file(path));
}

PlaSpec load_pla(const std::string& path) { return parse_pla(read_file(path)); }

std::string bits_to_string(const Bits& bits) {
  std::string text;
  text.reserve(bits.size());
  for (std::uint8_t b : bits) text += b ? '1' : '0';
  return text;
}

Bits bits_from_string(const std::string& text) {
  Bits bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::runtime_error("input bits must be 0s and 1s, got '" + text + "'");
    }
    bits.push_back(c == '1' ? 1 : 0);
  }
  return bits;
}

int do_synth(const std::string& pla_path, const std::string& backend_arg,
             bool full_plane, const std::string& out_path, std::ostream& out) {
  const PlaSpec spec = load_pla(pla_path);
  SynthOptions options;
  options.backend = *backend_from_name(backend_arg);
  options.full_plane = full_plane;
  options.name = file_stem(pla_path);
  const Netlist netlist = synthesize(spec, options);
  write_file(out_path, serialize_netlist(netlist));
  const CostReport report = cost_report(netlist);
  out << "wrote " << out_path << ": " << report.gate_total << " gates, quantum cost "
      << report.quantum_cost << "\n";
  return 0;
}

int do_sim(const std::string& netlist_path, const std::string& input_arg,
           bool table, std::ostream& out) {
  const Netlist netlist = load_netlist(netlist_path);
  if (!input_arg.empty() && table) {
    throw std::runtime_error("--input and --table are mutually exclusive");
  }
  if (!input_arg.empty()) {
    const Bits inputs = bits_from_string(input_arg);
    out << bits_to_string(evaluate_outputs(netlist, inputs)) << "\n";
    return 0;
  }
  const TruthTable tt = truth_table(netlist);
  out << "# inputs:";
  for (std::uint32_t i = 0; i < netlist.input_count(); ++i) {
    out << ' ' << netlist.input_label(i);
  }
  out << "\n# outputs:";
  for (std::uint32_t j = 0; j < netlist.output_count(); ++j) {
    out << ' ' << netlist.output_label(j);
  }
  out << "\n";
  for (std::uint64_t v = 0; v < tt.rows.size(); ++v) {
    std::string row;
    for (unsigned i = 0; i < tt.n; ++i) {
      row += ((v >> (tt.n - 1 - i)) & 1u) ? '1' : '0';
    }
    row += ' ';
    for (unsigned j = 0; j < tt.m; ++j) {
      row += ((tt.rows[v] >> j) & 1u) ? '1' : '0';
    }
    out << row << "\n";
  }
  return 0;
}

int do_verify(const std::string& netlist_path, const std::string& pla_path,
              std::ostream& out) {
  const Netlist netlist = load_netlist(netlist_path);
  const PlaSpec spec = load_pla(pla_path);
  const MintermCover cover = expand_to_minterms(spec);
  EquivalenceCheck check;
  try {
    check = check_equivalence(netlist, cover);
  } catch (const CircuitError& e) {
    if (e.kind() == DiagnosticKind::ShapeMismatch) {
      out << "not equivalent: " << e.what() << "\n";
      return 1;
    }
    throw;
  }
  if (check.equivalent) {
    out << "equivalent: " << netlist_path << " matches " << pla_path << " on all "
        << (std::uint64_t{1} << cover.n) << " input vectors\n";
    return 0;
  }
  out << "not equivalent: at input " << bits_to_string(check.mismatch_input)
      << " got " << bits_to_string(check.got) << ", expected "
      << bits_to_string(check.expected) << "\n";
  return 1;
}

int do_cost(const std::string& netlist_path, bool json, std::ostream& out) {
  const Netlist netlist = load_netlist(netlist_path);
  out << (json ? render_cost_json(netlist) : render_cost_text(netlist));
  return 0;
}

int do_compare(const std::string& pla_path, bool full_plane, bool json,
               std::ostream& out) {
  const PlaSpec spec = load_pla(pla_path);
  ComparisonTable table = compare(spec, full_plane);
  table.name = file_stem(pla_path);
  out << (json ? render_comparison_json(table) : render_comparison_text(table));
  return 0;
}

int do_emit(const std::string& netlist_path, const std::string& format,
            const std::string& out_path, std::ostream& out) {
  const Netlist netlist = load_netlist(netlist_path);
  const std::string rendered =
      format == "dot" ? emit_dot(netlist) : serialize_netlist(netlist);
  if (out_path.empty()) {
    out << rendered;
  } else {
    write_file(out_path, rendered);
    out << "wrote " << out_path << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"reversible PLA synthesis and cost analysis", "rpla"};
  app.require_subcommand(1);

  std::string pla_path;
  std::string netlist_path;
  std::string out_path;
  std::string backend_arg;
  std::string input_arg;
  std::string format_arg;
  bool full_plane = false;
  bool table_flag = false;
  bool json_flag = false;

  CLI::App* synth = app.add_subcommand("synth", "synthesize a netlist from a .pla file");
  synth->add_option("pla", pla_path, "input .pla file")->required();
  synth->add_option("--backend", backend_arg, "gate family: mux or fredkin")
      ->required()
      ->check(CLI::IsMember({"mux", "fredkin"}));
  synth->add_flag("--full-plane", full_plane, "realize every minterm, not just covered ones");
  synth->add_option("-o,--output", out_path, "netlist file to write")->required();

  CLI::App* sim = app.add_subcommand("sim", "simulate a netlist");
  sim->add_option("netlist", netlist_path, "netlist file")->required();
  sim->add_option("--input", input_arg, "one input vector, e.g. 011");
  sim->add_flag("--table", table_flag, "print the full truth table (default)");

  CLI::App* verify = app.add_subcommand("verify", "check a netlist against a .pla file");
  verify->add_option("netlist", netlist_path, "netlist file")->required();
  verify->add_option("--against", pla_path, ".pla file to compare with")->required();

  CLI::App* cost = app.add_subcommand("cost", "print cost metrics for a netlist");
  cost->add_option("netlist", netlist_path, "netlist file")->required();
  cost->add_flag("--json", json_flag, "machine-readable output");

  CLI::App* cmp = app.add_subcommand("compare", "synthesize with both backends and compare");
  cmp->add_option("pla", pla_path, "input .pla file")->required();
  cmp->add_flag("--full-plane", full_plane, "realize every minterm, not just covered ones");
  cmp->add_flag("--json", json_flag, "machine-readable output");

  CLI::App* emit = app.add_subcommand("emit", "re-emit a netlist as dot or json");
  emit->add_option("netlist", netlist_path, "netlist file")->required();
  emit->add_option("--format", format_arg, "dot or json")
      ->required()
      ->check(CLI::IsMember({"dot", "json"}));
  emit->add_option("-o,--output", out_path, "file to write instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*synth) return do_synth(pla_path, backend_arg, full_plane, out_path, out);
    if (*sim) return do_sim(netlist_path, input_arg, table_flag, out);
    if (*verify) return do_verify(netlist_path, pla_path, out);
    if (*cost) return do_cost(netlist_path, json_flag, out);
    if (*cmp) return do_compare(pla_path, full_plane, json_flag, out);
    if (*emit) return do_emit(netlist_path, format_arg, out_path, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

int run_cli(int argc, const char* const* argv) {
  return run_cli(argc, argv, std::cout, std::cerr);
}

}  // namespace rpla
