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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clusterndd/cluster.hpp"
#include "clusterndd/gates.hpp"
#include "clusterndd/qstate.hpp"

namespace clusterndd {

// A Pauli observable with X on x_qubits and Z on z_qubits (the two sets are
// disjoint, so no Y factors). Measured into one ancilla; outcome bit 1 means
// eigenvalue -1.
struct StabilizerCheck {
  std::vector<int> x_qubits;
  std::vector<int> z_qubits;

  // e.g. "XXIZ"
  std::string word(int n_data) const;
};

// One check per ancilla, in ancilla order. Ancilla k's outcome is bit k of
// the table label.
const std::vector<StabilizerCheck>& ndd_checks(Family family);

struct NddCircuit {
  Family family;
  int n_data;
  // data qubits 1..n_data, ancillas n_data+1..2*n_data, ancillas start in |0>
  int total_qubits;
  Circuit circuit;

  std::vector<int> ancillas() const;
};

// Z-only checks copy parities onto the ancilla with CNOTs. Checks with X
// factors use the ancilla as control between two Hadamards: CNOT onto each
// X qubit, CZ onto each Z qubit.
NddCircuit build_ndd_circuit(Family family);
const NddCircuit& ndd_circuit(Family family);

struct NddOutcome {
  std::string label;
  double probability;
  StateVector post_state;  // data register only
};

// Every ancilla outcome with probability above kNormTolerance. NDD is only
// defined against an orthonormal table: asking for Verbatim on a family
// whose printed table fails the audit throws ConfigurationError.
std::vector<NddOutcome> branch_ndd(const StateVector& state, Family family,
                                   TableMode mode = TableMode::Repaired);

NddOutcome run_ndd(const StateVector& state, Family family, std::uint64_t seed,
                   TableMode mode = TableMode::Repaired);

}  // namespace clusterndd
