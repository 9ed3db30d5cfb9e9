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

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "clusterndd/errors.hpp"
#include "clusterndd/gates.hpp"

namespace clusterndd {
namespace {

int parse_index(const std::string& token, int line_no) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty()) {
    throw ArgumentError("line " + std::to_string(line_no) + ": bad qubit index '" + token + "'");
  }
  return value;
}

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

// Named matrix of an op, if it is one of H/X/Y/Z.
const char* matrix_name(const Matrix2& m) {
  for (GateName g : {GateName::H, GateName::X, GateName::Y, GateName::Z}) {
    const Matrix2 ref = gate_matrix(g);
    bool same = true;
    for (std::size_t k = 0; k < 4; ++k) same = same && std::abs(ref[k] - m[k]) <= kTolerance;
    if (!same) continue;
    switch (g) {
      case GateName::H: return "H";
      case GateName::X: return "X";
      case GateName::Y: return "Y";
      case GateName::Z: return "Z";
    }
  }
  return nullptr;
}

}  // namespace

Circuit parse_circuit(std::string_view text, int n_qubits) {
  Circuit circuit(n_qubits);
  std::istringstream lines{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) continue;

    const std::string op = upper(words[0]);
    auto need_args = [&](std::size_t n) {
      if (words.size() != n + 1) {
        throw ArgumentError("line " + std::to_string(line_no) + ": " + op + " takes " +
                            std::to_string(n) + " qubit arguments");
      }
    };
    try {
      if (op == "CNOT" || op == "CX") {
        need_args(2);
        circuit.add(cnot(parse_index(words[1], line_no), parse_index(words[2], line_no)));
      } else if (op == "CZ") {
        need_args(2);
        circuit.add(cz(parse_index(words[1], line_no), parse_index(words[2], line_no)));
      } else if (op == "SWAP") {
        need_args(2);
        circuit.add(swap(parse_index(words[1], line_no), parse_index(words[2], line_no)));
      } else {
        const GateName name = parse_gate_name(op);
        if (words.size() < 2) {
          throw ArgumentError("line " + std::to_string(line_no) + ": missing target");
        }
        const int target = parse_index(words[1], line_no);
        std::vector<int> positive;
        std::vector<int> negative;
        for (std::size_t k = 2; k < words.size(); ++k) {
          const std::string& w = words[k];
          if (w.size() < 2 || (w[0] != '+' && w[0] != '-')) {
            throw ArgumentError("line " + std::to_string(line_no) + ": control '" + w +
                                "' must start with + or -");
          }
          const int q = parse_index(w.substr(1), line_no);
          (w[0] == '+' ? positive : negative).push_back(q);
        }
        circuit.add(named_gate(name, target).controlled(std::move(positive), std::move(negative)));
      }
    } catch (const ArgumentError& e) {
      const std::string what = e.what();
      if (what.rfind("line ", 0) == 0) throw;
      throw ArgumentError("line " + std::to_string(line_no) + ": " + what);
    }
  }
  return circuit;
}

std::string format_circuit(const Circuit& circuit) {
  std::ostringstream out;
  for (const auto& op : circuit.ops()) {
    const char* name = matrix_name(op.matrix());
    if (name == nullptr) throw ArgumentError("op " + op.label() + " has no text form");
    out << name << ' ' << op.target();
    for (int q : op.positive_controls()) out << " +" << q;
    for (int q : op.negative_controls()) out << " -" << q;
    out << '\n';
  }
  return out.str();
}

}  // namespace clusterndd
