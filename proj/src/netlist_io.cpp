#include "rpla/netlist_io.hpp"

#include <algorithm>
#include <utility>

#include <json.hpp>

#include "rpla/errors.hpp"

namespace rpla {

using nlohmann::ordered_json;

std::string serialize_netlist(const Netlist& netlist) {
  ordered_json doc;
  doc["format"] = kNetlistFormatName;
  doc["version"] = kNetlistFormatVersion;
  doc["name"] = netlist.name;

  ordered_json inputs = ordered_json::array();
  for (std::uint32_t i = 0; i < netlist.input_count(); ++i) {
    inputs.push_back(netlist.input_label(i));
  }
  doc["inputs"] = std::move(inputs);

  ordered_json outputs = ordered_json::array();
  for (std::uint32_t j = 0; j < netlist.output_count(); ++j) {
    outputs.push_back(netlist.output_label(j));
  }
  doc["outputs"] = std::move(outputs);

  ordered_json constants = ordered_json::array();
  for (LineId id : netlist.constant_lines) {
    constants.push_back({{"line", id}, {"bit", netlist.line(id).driver.index & 1u}});
  }
  doc["constants"] = std::move(constants);

  ordered_json gates = ordered_json::array();
  for (const GateInstance& gate : netlist.gates) {
    ordered_json entry;
    entry["id"] = gate.id;
    entry["kind"] = gate_kind_name(gate.kind);
    entry["role"] = role_name_string(gate.role);
    if (gate.plane != Plane::None) entry["plane"] = plane_name(gate.plane);
    entry["inputs"] = gate.inputs;
    entry["outputs"] = gate.outputs;
    gates.push_back(std::move(entry));
  }
  doc["gates"] = std::move(gates);

  ordered_json marks = ordered_json::array();
  for (std::uint32_t j = 0; j < netlist.output_count(); ++j) {
    const LineId id = netlist.primary_outputs[j];
    if (id == kNoLine) {
      throw CircuitError(DiagnosticKind::MissingOutput,
                         "cannot serialize: output " + std::to_string(j) +
                             " has no line",
                         {j});
    }
    marks.push_back({{"index", j}, {"line", id}});
  }
  doc["primary_outputs"] = std::move(marks);

  return doc.dump(2) + "\n";
}

namespace {

[[noreturn]] void fail(const std::string& message) { throw ParseError(0, 0, message); }

const ordered_json& field(const ordered_json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

std::uint32_t as_u32(const ordered_json& value, const char* what) {
  if (!value.is_number_unsigned() ||
      value.get<std::uint64_t>() > 0xfffffffeull) {
    fail(std::string(what) + " must be a small non-negative integer");
  }
  return value.get<std::uint32_t>();
}

struct ConstantRecord {
  LineId line;
  std::uint8_t bit;
};

}  // namespace

Netlist deserialize_netlist(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, 0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("document must be a JSON object");
  if (field(doc, "format") != kNetlistFormatName) {
    fail("unrecognized format, expected \"" + std::string(kNetlistFormatName) + "\"");
  }
  if (field(doc, "version") != kNetlistFormatVersion) {
    fail("unsupported version, expected " + std::to_string(kNetlistFormatVersion));
  }

  const ordered_json& inputs = field(doc, "inputs");
  const ordered_json& outputs = field(doc, "outputs");
  if (!inputs.is_array() || !outputs.is_array()) {
    fail("'inputs' and 'outputs' must be label arrays");
  }

  Netlist netlist(static_cast<unsigned>(inputs.size()),
                  field(doc, "name").get<std::string>());
  for (const auto& label : inputs) {
    netlist.input_labels.push_back(label.get<std::string>());
  }
  for (const auto& label : outputs) {
    netlist.output_labels.push_back(label.get<std::string>());
  }

  std::vector<ConstantRecord> constants;
  for (const auto& entry : field(doc, "constants")) {
    constants.push_back({as_u32(field(entry, "line"), "constant line"),
                         static_cast<std::uint8_t>(as_u32(field(entry, "bit"),
                                                          "constant bit") & 1u)});
  }
  std::sort(constants.begin(), constants.end(),
            [](const ConstantRecord& a, const ConstantRecord& b) {
              return a.line < b.line;
            });

  // Replay creation order: constants interleave with gates by line id, gates
  // come in id order. The builder re-issues ids, and any disagreement with
  // the document means the ids were not dense creation-order ids.
  std::size_t next_constant = 0;
  const auto add_constants_below = [&](LineId limit) {
    while (next_constant < constants.size() && constants[next_constant].line < limit) {
      const ConstantRecord& record = constants[next_constant];
      const LineId got = netlist.add_constant(record.bit);
      if (got != record.line) {
        fail("constant declared on line " + std::to_string(record.line) +
             " but creation order assigns line " + std::to_string(got));
      }
      ++next_constant;
    }
  };

  try {
    const ordered_json& gates = field(doc, "gates");
    if (!gates.is_array()) fail("'gates' must be an array");
    std::uint32_t expected_id = 0;
    for (const auto& entry : gates) {
      const std::uint32_t id = as_u32(field(entry, "id"), "gate id");
      if (id != expected_id) {
        fail("gate ids must be dense and ascending; expected " +
             std::to_string(expected_id) + ", got " + std::to_string(id));
      }
      ++expected_id;

      const auto kind = gate_kind_from_name(field(entry, "kind").get<std::string>());
      if (!kind) fail("unknown gate kind in gate " + std::to_string(id));
      const auto role = role_from_string(field(entry, "role").get<std::string>());
      if (!role) fail("unknown gate role in gate " + std::to_string(id));
      Plane plane = Plane::None;
      if (const auto it = entry.find("plane"); it != entry.end()) {
        const auto parsed = plane_from_name(it->get<std::string>());
        if (!parsed) fail("unknown plane in gate " + std::to_string(id));
        plane = *parsed;
      }

      std::vector<LineId> gate_inputs;
      for (const auto& value : field(entry, "inputs")) {
        gate_inputs.push_back(as_u32(value, "gate input line"));
      }
      std::vector<LineId> declared_outputs;
      for (const auto& value : field(entry, "outputs")) {
        declared_outputs.push_back(as_u32(value, "gate output line"));
      }
      if (declared_outputs.empty()) fail("gate " + std::to_string(id) + " has no outputs");

      add_constants_below(declared_outputs[0]);
      const std::vector<LineId> created =
          netlist.add_gate(*kind, *role, gate_inputs, plane);
      if (created != declared_outputs) {
        fail("gate " + std::to_string(id) +
             " output lines do not follow creation order");
      }
    }
    add_constants_below(kNoLine);

    for (const auto& entry : field(doc, "primary_outputs")) {
      const std::uint32_t index = as_u32(field(entry, "index"), "output index");
      const LineId line = as_u32(field(entry, "line"), "output line");
      if (index >= netlist.output_labels.size()) {
        fail("output index " + std::to_string(index) + " is out of range");
      }
      netlist.mark_output(line, index);
    }
    if (netlist.primary_outputs.size() < netlist.output_labels.size()) {
      netlist.primary_outputs.resize(netlist.output_labels.size(), kNoLine);
    }
  } catch (const CircuitError& e) {
    fail(std::string("document violates netlist rules: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("malformed field: ") + e.what());
  }

  const std::vector<Diagnostic> findings = validate(netlist);
  if (!findings.empty()) {
    fail("document fails validation: " + findings[0].message);
  }
  return netlist;
}

}  // namespace rpla
