#include "rpla/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace rpla {

using nlohmann::ordered_json;

namespace {

bool has_plane_tags(const Netlist& netlist) {
  return std::any_of(netlist.gates.begin(), netlist.gates.end(),
                     [](const GateInstance& g) { return g.plane != Plane::None; });
}

std::string gates_summary(const CostReport& report) {
  std::ostringstream out;
  out << report.gate_total << " (";
  bool first = true;
  for (std::size_t k = 0; k < kGateKindCount; ++k) {
    if (report.gates_by_kind[k] == 0) continue;
    if (!first) out << ", ";
    out << gate_kind_name(static_cast<GateKind>(k)) << ' ' << report.gates_by_kind[k];
    first = false;
  }
  if (first) out << "none";
  out << ')';
  return out.str();
}

void append_report_lines(std::ostringstream& out, const CostReport& report,
                         const std::string& indent) {
  out << indent << "gates: " << gates_summary(report) << "\n";
  out << indent << "quantum cost: " << report.quantum_cost << "\n";
  out << indent << "constant inputs: " << report.constant_inputs << "\n";
  out << indent << "garbage outputs: " << report.garbage_strict;
  if (!report.garbage_note.empty()) out << " (" << report.garbage_note << ")";
  out << "\n";
  out << indent << "logical calculation: xor " << report.logic_calc.xors << ", and "
      << report.logic_calc.ands << ", not " << report.logic_calc.nots << "\n";
}

ordered_json report_json(const CostReport& report) {
  ordered_json gates;
  for (std::size_t k = 0; k < kGateKindCount; ++k) {
    gates[std::string(gate_kind_name(static_cast<GateKind>(k)))] =
        report.gates_by_kind[k];
  }
  gates["total"] = report.gate_total;
  ordered_json entry;
  entry["gates"] = std::move(gates);
  entry["quantum_cost"] = report.quantum_cost;
  entry["constant_inputs"] = report.constant_inputs;
  entry["garbage_outputs"] = {{"strict", report.garbage_strict},
                              {"note", report.garbage_note}};
  entry["logical_calculation"] = {{"xor", report.logic_calc.xors},
                                  {"and", report.logic_calc.ands},
                                  {"not", report.logic_calc.nots}};
  return entry;
}

ordered_json backend_json(const BackendCosts& side) {
  ordered_json entry;
  entry["backend"] = backend_name(side.backend);
  entry["total"] = report_json(side.total);
  entry["and_plane"] = report_json(side.and_plane);
  entry["or_plane"] = report_json(side.or_plane);
  return entry;
}

struct MetricRow {
  std::string label;
  std::uint64_t proposed;
  std::uint64_t existing;
};

std::vector<MetricRow> metric_rows(const CostReport& p, const CostReport& e) {
  return {
      {"gates", p.gate_total, e.gate_total},
      {"quantum cost", p.quantum_cost, e.quantum_cost},
      {"constant inputs", p.constant_inputs, e.constant_inputs},
      {"garbage outputs", p.garbage_strict, e.garbage_strict},
      {"logic xor", p.logic_calc.xors, e.logic_calc.xors},
      {"logic and", p.logic_calc.ands, e.logic_calc.ands},
      {"logic not", p.logic_calc.nots, e.logic_calc.nots},
  };
}

std::string signed_delta(std::uint64_t proposed, std::uint64_t existing) {
  const std::int64_t delta =
      static_cast<std::int64_t>(existing) - static_cast<std::int64_t>(proposed);
  if (delta > 0) return "+" + std::to_string(delta);
  return std::to_string(delta);
}

ordered_json delta_json(const CostReport& p, const CostReport& e) {
  ordered_json entry;
  for (const MetricRow& row : metric_rows(p, e)) {
    std::string key = row.label;
    std::replace(key.begin(), key.end(), ' ', '_');
    entry[key] = static_cast<std::int64_t>(row.existing) -
                 static_cast<std::int64_t>(row.proposed);
  }
  return entry;
}

}  // namespace

std::string render_cost_text(const Netlist& netlist) {
  std::ostringstream out;
  out << "netlist: " << netlist.name << "\n";
  append_report_lines(out, cost_report(netlist), "");
  if (has_plane_tags(netlist)) {
    out << "and plane:\n";
    append_report_lines(out, cost_report(netlist, Plane::AndPlane), "  ");
    out << "or plane:\n";
    append_report_lines(out, cost_report(netlist, Plane::OrPlane), "  ");
  }
  return out.str();
}

std::string render_cost_json(const Netlist& netlist) {
  ordered_json doc;
  doc["name"] = netlist.name;
  doc["total"] = report_json(cost_report(netlist));
  if (has_plane_tags(netlist)) {
    doc["and_plane"] = report_json(cost_report(netlist, Plane::AndPlane));
    doc["or_plane"] = report_json(cost_report(netlist, Plane::OrPlane));
  }
  return doc.dump(2) + "\n";
}

std::string render_comparison_text(const ComparisonTable& table) {
  const std::string proposed_name{backend_name(table.proposed.backend)};
  const std::string existing_name{backend_name(table.existing.backend)};

  struct Scope {
    std::string label;
    const CostReport* proposed;
    const CostReport* existing;
  };
  const std::vector<Scope> scopes = {
      {"and plane", &table.proposed.and_plane, &table.existing.and_plane},
      {"or plane", &table.proposed.or_plane, &table.existing.or_plane},
      {"total", &table.proposed.total, &table.existing.total},
  };

  std::size_t label_width = 0;
  for (const Scope& scope : scopes) {
    for (const MetricRow& row : metric_rows(*scope.proposed, *scope.existing)) {
      label_width = std::max(label_width, row.label.size());
    }
  }
  const std::size_t proposed_width = std::max<std::size_t>(proposed_name.size(), 6);
  const std::size_t existing_width = std::max<std::size_t>(existing_name.size(), 6);

  std::ostringstream out;
  out << "comparison: " << table.name << " ("
      << (table.full_plane ? "full plane" : "covered terms") << ")\n";
  const auto pad = [](const std::string& s, std::size_t width) {
    return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
  };
  const auto lead = [](const std::string& s, std::size_t width) {
    return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
  };
  out << pad("", label_width + 2) << lead(proposed_name, proposed_width) << "  "
      << lead(existing_name, existing_width) << "  " << lead("delta", 6) << "\n";
  for (const Scope& scope : scopes) {
    out << scope.label << "\n";
    for (const MetricRow& row : metric_rows(*scope.proposed, *scope.existing)) {
      out << "  " << pad(row.label, label_width)
          << lead(std::to_string(row.proposed), proposed_width) << "  "
          << lead(std::to_string(row.existing), existing_width) << "  "
          << lead(signed_delta(row.proposed, row.existing), 6) << "\n";
    }
  }
  out << "delta is " << existing_name << " minus " << proposed_name
      << "; positive means " << proposed_name << " is cheaper\n";
  return out.str();
}

std::string render_comparison_json(const ComparisonTable& table) {
  ordered_json doc;
  doc["name"] = table.name;
  doc["plane_mode"] = table.full_plane ? "full" : "covered";
  doc["proposed"] = backend_json(table.proposed);
  doc["existing"] = backend_json(table.existing);
  ordered_json delta;
  delta["and_plane"] = delta_json(table.proposed.and_plane, table.existing.and_plane);
  delta["or_plane"] = delta_json(table.proposed.or_plane, table.existing.or_plane);
  delta["total"] = delta_json(table.proposed.total, table.existing.total);
  doc["delta"] = std::move(delta);
  return doc.dump(2) + "\n";
}

}  // namespace rpla
