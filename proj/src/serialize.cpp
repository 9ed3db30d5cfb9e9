// Copyright 2026 The clusterndd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clusterndd/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "clusterndd/errors.hpp"
#include "clusterndd/render.hpp"

namespace clusterndd {
namespace {

using nlohmann::json;

std::string sci(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

json complex_json(Amplitude a) { return json::array({a.real(), a.imag()}); }

}  // namespace

std::string write_state_document(const StateVector& state) {
  std::string out = "{\n  \"n_qubits\": " + std::to_string(state.n_qubits()) + ",\n  \"amps\": [\n";
  for (std::size_t i = 0; i < state.dim(); ++i) {
    out += "    [" + sci(state[i].real()) + ", " + sci(state[i].imag()) + "]";
    out += i + 1 < state.dim() ? ",\n" : "\n";
  }
  return out + "  ]\n}\n";
}

StateVector read_state_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ArgumentError(std::string("state document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n_qubits") || !doc.contains("amps") ||
      !doc["n_qubits"].is_number_integer() || !doc["amps"].is_array()) {
    throw ArgumentError("state document needs integer n_qubits and an amps array");
  }
  const int n = doc["n_qubits"].get<int>();
  std::vector<Amplitude> amps;
  for (const auto& pair : doc["amps"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw ArgumentError("each amplitude must be a [re, im] pair");
    }
    amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return StateVector(n, std::move(amps));
}

StateVector load_state(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return read_state_document(buf.str());
}

void save_state(const std::filesystem::path& path, const StateVector& state) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write " + path.string());
  out << write_state_document(state);
}

std::string audit_to_json(const AuditReport& report) {
  json j;
  j["family"] = std::string(family_info(report.family).name);
  j["defects"] = report.non_orthogonal_pairs.size();
  j["non_orthogonal_pairs"] = json::array();
  for (const auto& p : report.non_orthogonal_pairs) {
    j["non_orthogonal_pairs"].push_back(
        {{"a", p.label_a}, {"b", p.label_b}, {"inner_product", complex_json(p.inner_product)}});
  }
  j["suggested_repairs"] = json::array();
  for (const auto& r : report.suggested_repairs) {
    j["suggested_repairs"].push_back({{"label", r.label}, {"ket", r.ket}, {"sign", r.new_sign}});
  }
  j["unrepaired_blocks"] = report.unrepaired_blocks;
  return j.dump(2);
}

std::string outcomes_to_json(const std::vector<NddOutcome>& outcomes, Family family,
                             TableMode mode) {
  json j;
  j["family"] = std::string(family_info(family).name);
  j["table"] = mode == TableMode::Repaired ? "repaired" : "verbatim";
  j["outcomes"] = json::array();
  for (const auto& o : outcomes) {
    j["outcomes"].push_back(
        {{"label", o.label},
         {"probability", o.probability},
         {"fidelity", fidelity_up_to_phase(o.post_state, table_state(family, o.label, mode))},
         {"post_state", ket_form(o.post_state)}});
  }
  return j.dump(2);
}

std::string transcript_to_json(const DialogueTranscript& transcript) {
  json j;
  j["turns"] = json::array();
  for (const auto& t : transcript.turns) {
    j["turns"].push_back({{"speaker", t.speaker},
                          {"sent", t.sent},
                          {"label", t.label},
                          {"candidates", t.candidates},
                          {"decoded", t.decoded},
                          {"ok", t.ok},
                          {"channel_fidelity", t.channel_fidelity}});
  }
  j["decode_errors"] = transcript.decode_errors();
  return j.dump(2);
}

std::string syndrome_to_json(const SyndromeTable& table) {
  json j;
  j["family"] = std::string(family_info(table.family()).name);
  j["cases"] = json::array();
  for (const auto& [error, label] : table.cases()) {
    j["cases"].push_back({{"error", error.str()}, {"label", label}});
  }
  j["entries"] = json::object();
  for (const auto& [label, errors] : table.entries()) {
    json list = json::array();
    for (const auto& e : errors) list.push_back(e.str());
    j["entries"][label] = list;
  }
  j["distinct_labels"] = table.distinct_labels();
  j["injection_cases"] = table.cases().size();
  j["claimed_orthogonal_states"] = kClaimedErrorStates;
  j["collisions"] = table.collisions();
  return j.dump(2);
}

}  // namespace clusterndd
