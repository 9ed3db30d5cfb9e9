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

#include "clusterndd/ndd.hpp"

#include <string>

#include "clusterndd/errors.hpp"
#include "state_access.hpp"

namespace clusterndd {

std::string StabilizerCheck::word(int n_data) const {
  std::string w(static_cast<std::size_t>(n_data), 'I');
  for (int q : x_qubits) w[static_cast<std::size_t>(q - 1)] = 'X';
  for (int q : z_qubits) w[static_cast<std::size_t>(q - 1)] = 'Z';
  return w;
}

const std::vector<StabilizerCheck>& ndd_checks(Family family) {
  // Each row of the table is a joint eigenstate of these observables, and
  // bit k of its label is the -1 indicator of check k.
  static const std::vector<StabilizerCheck> c4 = {
      {{}, {1, 2}},      // ZZII
      {{1, 2}, {4}},     // XXIZ
      {{}, {3, 4}},      // IIZZ
      {{3, 4}, {1}},     // ZIXX
  };
  static const std::vector<StabilizerCheck> c5 = {
      {{}, {3, 5}},        // IIZIZ
      {{}, {1, 2}},        // ZZIII
      {{1, 2, 3, 5}, {}},  // XXXIX
      {{}, {1, 3, 4}},     // ZIZZI
      {{3, 4, 5}, {}},     // IIXXX
  };
  return family == Family::C4 ? c4 : c5;
}

std::vector<int> NddCircuit::ancillas() const {
  std::vector<int> out;
  for (int k = 1; k <= n_data; ++k) out.push_back(n_data + k);
  return out;
}

NddCircuit build_ndd_circuit(Family family) {
  const int n = family_info(family).n_data;
  NddCircuit ndd{family, n, 2 * n, Circuit(2 * n)};
  const auto& checks = ndd_checks(family);
  for (std::size_t k = 0; k < checks.size(); ++k) {
    const int ancilla = n + 1 + static_cast<int>(k);
    const auto& check = checks[k];
    if (check.x_qubits.empty()) {
      for (int q : check.z_qubits) ndd.circuit.add(cnot(q, ancilla));
      continue;
    }
    ndd.circuit.add(named_gate(GateName::H, ancilla));
    for (int q : check.x_qubits) ndd.circuit.add(cnot(ancilla, q));
    for (int q : check.z_qubits) ndd.circuit.add(cz(ancilla, q));
    ndd.circuit.add(named_gate(GateName::H, ancilla));
  }
  return ndd;
}

const NddCircuit& ndd_circuit(Family family) {
  static const NddCircuit c4 = build_ndd_circuit(Family::C4);
  static const NddCircuit c5 = build_ndd_circuit(Family::C5);
  return family == Family::C4 ? c4 : c5;
}

namespace {

StateVector prepare_joint(const StateVector& state, Family family, TableMode mode) {
  const int n = family_info(family).n_data;
  if (state.n_qubits() != n) {
    throw ArgumentError("NDD for " + std::string(family_info(family).name) + " needs " +
                        std::to_string(n) + " data qubits, got " +
                        std::to_string(state.n_qubits()));
  }
  if (mode == TableMode::Verbatim && !audit_orthogonality(family).clean()) {
    throw ConfigurationError("the printed " + std::string(family_info(family).name) +
                             " table is not orthonormal; NDD needs the repaired table");
  }
  const StateVector ancillas = basis_state(n, std::string(static_cast<std::size_t>(n), '0'));
  return run_circuit(ndd_circuit(family).circuit, tensor(state, ancillas));
}

// After measurement the ancillas sit in the basis state `bits`, so the joint
// state is data (x) |bits> and the data amplitudes can be read off directly.
NddOutcome to_outcome(const MeasurementBranch& branch, int n) {
  const std::uint64_t anc = bits_to_index(branch.bits);
  std::vector<Amplitude> data(std::size_t{1} << n);
  for (std::uint64_t d = 0; d < data.size(); ++d) data[d] = branch.post_state[(d << n) | anc];
  return {branch.bits, branch.probability, StateAccess::make(n, std::move(data))};
}

}  // namespace

std::vector<NddOutcome> branch_ndd(const StateVector& state, Family family, TableMode mode) {
  const StateVector joint = prepare_joint(state, family, mode);
  const int n = family_info(family).n_data;
  std::vector<NddOutcome> outcomes;
  for (const auto& branch : branch_enumerate(joint, ndd_circuit(family).ancillas())) {
    outcomes.push_back(to_outcome(branch, n));
  }
  return outcomes;
}

NddOutcome run_ndd(const StateVector& state, Family family, std::uint64_t seed, TableMode mode) {
  const StateVector joint = prepare_joint(state, family, mode);
  return to_outcome(measure(joint, ndd_circuit(family).ancillas(), seed), family_info(family).n_data);
}

}  // namespace clusterndd
