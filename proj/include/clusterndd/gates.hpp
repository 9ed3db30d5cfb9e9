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

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "clusterndd/qstate.hpp"

namespace clusterndd {

// Row-major 2x2 matrix {m00, m01, m10, m11}.
using Matrix2 = std::array<Amplitude, 4>;

bool is_unitary(const Matrix2& m, double tolerance = kTolerance);
Matrix2 adjoint(const Matrix2& m);

// A single-qubit unitary on `target`, applied only to basis states where
// every positive control reads 1 and every negative control reads 0.
class GateApplication {
 public:
  // Throws ValidationError if the matrix is not unitary within kTolerance,
  // ArgumentError if indices are < 1, repeated, or shared between target and
  // control sets.
  GateApplication(Matrix2 matrix, int target, std::vector<int> positive_controls = {},
                  std::vector<int> negative_controls = {}, std::string label = "U");

  const Matrix2& matrix() const { return matrix_; }
  int target() const { return target_; }
  const std::vector<int>& positive_controls() const { return positive_controls_; }
  const std::vector<int>& negative_controls() const { return negative_controls_; }
  const std::string& label() const { return label_; }

  // Largest qubit index referenced.
  int max_qubit() const;

  GateApplication inverse() const;

  // Same matrix and target, with the extra controls merged in.
  GateApplication controlled(std::vector<int> positive, std::vector<int> negative = {}) const;

 private:
  Matrix2 matrix_;
  int target_;
  std::vector<int> positive_controls_;
  std::vector<int> negative_controls_;
  std::string label_;
};

enum class GateName { H, X, Y, Z };

GateName parse_gate_name(std::string_view name);  // throws ArgumentError
Matrix2 gate_matrix(GateName name);

GateApplication named_gate(GateName name, int target);
GateApplication named_gate(std::string_view name, int target);
GateApplication cnot(int control, int target);
GateApplication cz(int a, int b);
// Three alternating CNOTs.
std::vector<GateApplication> swap(int a, int b);

class Circuit {
 public:
  explicit Circuit(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  const std::vector<GateApplication>& ops() const { return ops_; }
  bool empty() const { return ops_.empty(); }

  // Throws ArgumentError if the op references a qubit outside [1, n_qubits].
  Circuit& add(GateApplication op);
  Circuit& add(const std::vector<GateApplication>& ops);
  Circuit& add(const Circuit& other);

  // Reversed sequence of inverted ops.
  Circuit inverse() const;

 private:
  int n_qubits_;
  std::vector<GateApplication> ops_;
};

StateVector run_circuit(const Circuit& circuit, const StateVector& input);

struct UnitarityReport {
  bool pass = true;
  // max |<U e_i|U e_j> - delta_ij| over all column pairs
  double worst_deviation = 0.0;
  std::size_t worst_i = 0;
  std::size_t worst_j = 0;
};

// Runs the circuit on every basis state and checks the resulting columns
// are orthonormal within kTolerance.
UnitarityReport verify_circuit_unitary(const Circuit& circuit);

// Line-oriented circuit text. One op per line:
//
//   GATE target [+control ...] [-control ...]
//
// GATE is H, X, Y or Z; "+k" adds a positive control on qubit k and "-k" a
// negative (open) control. CNOT c t, CZ a b and SWAP a b are accepted as
// shorthands. Blank lines and text after '#' are ignored.
Circuit parse_circuit(std::string_view text, int n_qubits);
std::string format_circuit(const Circuit& circuit);

}  // namespace clusterndd
