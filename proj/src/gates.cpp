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

#include "clusterndd/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "clusterndd/errors.hpp"
#include "state_access.hpp"

namespace clusterndd {
namespace {

void require_valid_index(int q, const char* role) {
  if (q < 1) throw ArgumentError(std::string(role) + " index must be >= 1, got " + std::to_string(q));
}

std::vector<int> sorted_unique(std::vector<int> qubits, const char* role) {
  for (int q : qubits) require_valid_index(q, role);
  std::sort(qubits.begin(), qubits.end());
  if (std::adjacent_find(qubits.begin(), qubits.end()) != qubits.end()) {
    throw ArgumentError(std::string("repeated ") + role + " index");
  }
  return qubits;
}

}  // namespace

bool is_unitary(const Matrix2& m, double tolerance) {
  // columns (m00, m10) and (m01, m11) orthonormal
  const double c0 = std::norm(m[0]) + std::norm(m[2]);
  const double c1 = std::norm(m[1]) + std::norm(m[3]);
  const Amplitude cross = std::conj(m[0]) * m[1] + std::conj(m[2]) * m[3];
  return std::abs(c0 - 1.0) <= tolerance && std::abs(c1 - 1.0) <= tolerance &&
         std::abs(cross) <= tolerance;
}

Matrix2 adjoint(const Matrix2& m) {
  return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

GateApplication::GateApplication(Matrix2 matrix, int target, std::vector<int> positive_controls,
                                 std::vector<int> negative_controls, std::string label)
    : matrix_(matrix),
      target_(target),
      positive_controls_(sorted_unique(std::move(positive_controls), "control")),
      negative_controls_(sorted_unique(std::move(negative_controls), "control")),
      label_(std::move(label)) {
  require_valid_index(target, "target");
  if (!is_unitary(matrix_)) throw ValidationError("gate " + label_ + " is not unitary");
  auto contains = [](const std::vector<int>& v, int q) {
    return std::binary_search(v.begin(), v.end(), q);
  };
  if (contains(positive_controls_, target_) || contains(negative_controls_, target_)) {
    throw ArgumentError("gate " + label_ + ": target " + std::to_string(target_) +
                        " is also a control");
  }
  for (int q : positive_controls_) {
    if (contains(negative_controls_, q)) {
      throw ArgumentError("gate " + label_ + ": qubit " + std::to_string(q) +
                          " is both a positive and a negative control");
    }
  }
}

int GateApplication::max_qubit() const {
  int m = target_;
  if (!positive_controls_.empty()) m = std::max(m, positive_controls_.back());
  if (!negative_controls_.empty()) m = std::max(m, negative_controls_.back());
  return m;
}

GateApplication GateApplication::inverse() const {
  return GateApplication(adjoint(matrix_), target_, positive_controls_, negative_controls_,
                         label_ + "^-1");
}

GateApplication GateApplication::controlled(std::vector<int> positive,
                                            std::vector<int> negative) const {
  positive.insert(positive.end(), positive_controls_.begin(), positive_controls_.end());
  negative.insert(negative.end(), negative_controls_.begin(), negative_controls_.end());
  return GateApplication(matrix_, target_, std::move(positive), std::move(negative), label_);
}

GateName parse_gate_name(std::string_view name) {
  if (name == "H" || name == "h") return GateName::H;
  if (name == "X" || name == "x") return GateName::X;
  if (name == "Y" || name == "y") return GateName::Y;
  if (name == "Z" || name == "z") return GateName::Z;
  throw ArgumentError("unknown gate '" + std::string(name) + "'");
}

Matrix2 gate_matrix(GateName name) {
  constexpr double r = std::numbers::sqrt2 / 2;
  const Amplitude i{0.0, 1.0};
  switch (name) {
    case GateName::H:
      return {r, r, r, -r};
    case GateName::X:
      return {0.0, 1.0, 1.0, 0.0};
    case GateName::Y:
      return {0.0, -i, i, 0.0};
    case GateName::Z:
      return {1.0, 0.0, 0.0, -1.0};
  }
  throw ArgumentError("unknown gate");
}

namespace {
const char* gate_label(GateName name) {
  switch (name) {
    case GateName::H: return "H";
    case GateName::X: return "X";
    case GateName::Y: return "Y";
    case GateName::Z: return "Z";
  }
  return "?";
}
}  // namespace

GateApplication named_gate(GateName name, int target) {
  return GateApplication(gate_matrix(name), target, {}, {}, gate_label(name));
}

GateApplication named_gate(std::string_view name, int target) {
  return named_gate(parse_gate_name(name), target);
}

GateApplication cnot(int control, int target) {
  return GateApplication(gate_matrix(GateName::X), target, {control}, {}, "CNOT");
}

GateApplication cz(int a, int b) {
  // Z on the larger index keeps cz(a, b) and cz(b, a) identical values.
  return GateApplication(gate_matrix(GateName::Z), std::max(a, b), {std::min(a, b)}, {}, "CZ");
}

std::vector<GateApplication> swap(int a, int b) {
  if (a == b) throw ArgumentError("swap of qubit " + std::to_string(a) + " with itself");
  return {cnot(a, b), cnot(b, a), cnot(a, b)};
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1) throw ArgumentError("circuit needs at least one qubit");
  if (n_qubits > kMaxQubits) throw CapacityError("circuit exceeds the qubit cap");
}

Circuit& Circuit::add(GateApplication op) {
  if (op.max_qubit() > n_qubits_) {
    throw ArgumentError("op " + op.label() + " references qubit " +
                        std::to_string(op.max_qubit()) + " in a " + std::to_string(n_qubits_) +
                        "-qubit circuit");
  }
  ops_.push_back(std::move(op));
  return *this;
}

Circuit& Circuit::add(const std::vector<GateApplication>& ops) {
  for (const auto& op : ops) add(op);
  return *this;
}

Circuit& Circuit::add(const Circuit& other) {
  if (other.n_qubits_ > n_qubits_) throw ArgumentError("appended circuit is wider");
  return add(other.ops_);
}

Circuit Circuit::inverse() const {
  Circuit inv(n_qubits_);
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) inv.add(it->inverse());
  return inv;
}

StateVector run_circuit(const Circuit& circuit, const StateVector& input) {
  if (input.n_qubits() != circuit.n_qubits()) {
    throw ArgumentError("circuit has " + std::to_string(circuit.n_qubits()) +
                        " qubits, input has " + std::to_string(input.n_qubits()));
  }
  StateVector state = input;
  for (const auto& op : circuit.ops()) state = apply_gate(state, op);
  return state;
}

UnitarityReport verify_circuit_unitary(const Circuit& circuit) {
  const int n = circuit.n_qubits();
  const std::size_t dim = std::size_t{1} << n;
  std::vector<StateVector> columns;
  columns.reserve(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<Amplitude> e(dim);
    e[k] = 1.0;
    columns.push_back(run_circuit(circuit, StateAccess::make(n, std::move(e))));
  }
  UnitarityReport report;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      const Amplitude g = inner_product(columns[i], columns[j]);
      const double deviation = std::abs(g - Amplitude(i == j ? 1.0 : 0.0));
      if (deviation > report.worst_deviation) {
        report.worst_deviation = deviation;
        report.worst_i = i;
        report.worst_j = j;
      }
    }
  }
  report.pass = report.worst_deviation <= kTolerance;
  return report;
}

}  // namespace clusterndd
