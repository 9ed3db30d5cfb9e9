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

#include "clusterndd/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "clusterndd/errors.hpp"
#include "clusterndd/gates.hpp"
#include "state_access.hpp"

namespace clusterndd {
namespace {

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1) {
    throw ArgumentError("n_qubits must be positive, got " + std::to_string(n_qubits));
  }
  if (n_qubits > kMaxQubits) {
    throw CapacityError("n_qubits " + std::to_string(n_qubits) + " exceeds the cap of " +
                        std::to_string(kMaxQubits));
  }
}

void check_finite(std::span<const Amplitude> amps) {
  for (const auto& a : amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw ArgumentError("amplitude is not finite");
    }
  }
}

void check_targets(int n_qubits, std::span<const int> targets) {
  if (targets.empty()) throw ArgumentError("no measurement targets");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 1 || targets[i] > n_qubits) {
      throw ArgumentError("measurement target " + std::to_string(targets[i]) +
                          " out of range [1, " + std::to_string(n_qubits) + "]");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (targets[i] == targets[j]) {
        throw ArgumentError("measurement target " + std::to_string(targets[i]) + " repeated");
      }
    }
  }
}

}  // namespace

StateVector::StateVector(int n_qubits, std::vector<Amplitude> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {
  check_qubit_count(n_qubits);
  if (amps_.size() != (std::size_t{1} << n_qubits)) {
    throw ArgumentError("expected " + std::to_string(std::size_t{1} << n_qubits) +
                        " amplitudes, got " + std::to_string(amps_.size()));
  }
  check_finite(amps_);
  if (std::abs(norm_squared() - 1.0) > kNormTolerance) {
    throw ArgumentError("state is not normalized (norm^2 = " + std::to_string(norm_squared()) +
                        ")");
  }
}

StateVector StateVector::normalized(int n_qubits, std::vector<Amplitude> amps) {
  check_qubit_count(n_qubits);
  if (amps.size() != (std::size_t{1} << n_qubits)) {
    throw ArgumentError("expected " + std::to_string(std::size_t{1} << n_qubits) +
                        " amplitudes, got " + std::to_string(amps.size()));
  }
  check_finite(amps);
  double sum = 0.0;
  for (const auto& a : amps) sum += std::norm(a);
  if (sum == 0.0) throw ArgumentError("cannot normalize the zero vector");
  const double scale = 1.0 / std::sqrt(sum);
  for (auto& a : amps) a *= scale;
  return StateVector(Unchecked{}, n_qubits, std::move(amps));
}

double StateVector::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : amps_) sum += std::norm(a);
  return sum;
}

bool is_bitstring(std::string_view bits) {
  return !bits.empty() && std::all_of(bits.begin(), bits.end(),
                                      [](char c) { return c == '0' || c == '1'; });
}

std::string index_to_bits(std::uint64_t index, int width) {
  std::string bits(static_cast<std::size_t>(width), '0');
  for (int k = 0; k < width; ++k) {
    if (index & (std::uint64_t{1} << (width - 1 - k))) bits[static_cast<std::size_t>(k)] = '1';
  }
  return bits;
}

std::uint64_t bits_to_index(std::string_view bits) {
  if (!is_bitstring(bits)) {
    throw ArgumentError("not a bitstring: '" + std::string(bits) + "'");
  }
  if (bits.size() > 63) throw CapacityError("bitstring too long");
  std::uint64_t index = 0;
  for (char c : bits) index = (index << 1) | static_cast<std::uint64_t>(c == '1');
  return index;
}

StateVector basis_state(int n_qubits, std::string_view bits) {
  check_qubit_count(n_qubits);
  if (bits.size() != static_cast<std::size_t>(n_qubits)) {
    throw ArgumentError("bitstring '" + std::string(bits) + "' has length " +
                        std::to_string(bits.size()) + ", expected " + std::to_string(n_qubits));
  }
  std::vector<Amplitude> amps(std::size_t{1} << n_qubits);
  amps[bits_to_index(bits)] = 1.0;
  return StateAccess::make(n_qubits, std::move(amps));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  const int n = a.n_qubits() + b.n_qubits();
  check_qubit_count(n);
  std::vector<Amplitude> amps(std::size_t{1} << n);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] == Amplitude{}) continue;
    for (std::size_t j = 0; j < b.dim(); ++j) {
      amps[(i << b.n_qubits()) | j] = a[i] * b[j];
    }
  }
  return StateAccess::make(n, std::move(amps));
}

StateVector apply_gate(const StateVector& state, const GateApplication& gate) {
  const int n = state.n_qubits();
  if (gate.max_qubit() > n) {
    throw ArgumentError("gate " + gate.label() + " references qubit " +
                        std::to_string(gate.max_qubit()) + " of a " + std::to_string(n) +
                        "-qubit state");
  }
  std::uint64_t control_mask = 0;
  std::uint64_t control_value = 0;
  for (int q : gate.positive_controls()) {
    control_mask |= qubit_mask(n, q);
    control_value |= qubit_mask(n, q);
  }
  for (int q : gate.negative_controls()) control_mask |= qubit_mask(n, q);

  const std::uint64_t target = qubit_mask(n, gate.target());
  const auto& m = gate.matrix();
  std::vector<Amplitude> amps(state.amps().begin(), state.amps().end());
  for (std::uint64_t i0 = 0; i0 < amps.size(); ++i0) {
    if (i0 & target) continue;
    if ((i0 & control_mask) != control_value) continue;
    const std::uint64_t i1 = i0 | target;
    const Amplitude a0 = amps[i0];
    const Amplitude a1 = amps[i1];
    amps[i0] = m[0] * a0 + m[1] * a1;
    amps[i1] = m[2] * a0 + m[3] * a1;
  }
  return StateAccess::make(n, std::move(amps));
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw ArgumentError("inner product of " + std::to_string(a.n_qubits()) + "- and " +
                        std::to_string(b.n_qubits()) + "-qubit states");
  }
  Amplitude sum{};
  for (std::size_t i = 0; i < a.dim(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

double fidelity_up_to_phase(const StateVector& a, const StateVector& b) {
  return std::norm(inner_product(a, b));
}

std::vector<MeasurementBranch> branch_enumerate(const StateVector& state,
                                                std::span<const int> targets) {
  const int n = state.n_qubits();
  check_targets(n, targets);
  const std::size_t n_outcomes = std::size_t{1} << targets.size();

  auto outcome_of = [&](std::uint64_t index) {
    std::uint64_t outcome = 0;
    for (int q : targets) outcome = (outcome << 1) | static_cast<std::uint64_t>((index & qubit_mask(n, q)) != 0);
    return outcome;
  };

  std::vector<double> probability(n_outcomes, 0.0);
  for (std::uint64_t i = 0; i < state.dim(); ++i) probability[outcome_of(i)] += std::norm(state[i]);

  std::vector<MeasurementBranch> branches;
  for (std::uint64_t outcome = 0; outcome < n_outcomes; ++outcome) {
    const double p = probability[outcome];
    if (p <= kNormTolerance) continue;
    const double scale = 1.0 / std::sqrt(p);
    std::vector<Amplitude> amps(state.dim());
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
      if (outcome_of(i) == outcome) amps[i] = state[i] * scale;
    }
    branches.push_back({index_to_bits(outcome, static_cast<int>(targets.size())), p,
                        StateAccess::make(n, std::move(amps))});
  }
  // Branches below the cutoff are dropped; rescale so the kept ones sum to 1.
  double total = 0.0;
  for (const auto& b : branches) total += b.probability;
  for (auto& b : branches) b.probability /= total;
  return branches;
}

MeasurementBranch measure(const StateVector& state, std::span<const int> targets,
                          std::uint64_t seed) {
  auto branches = branch_enumerate(state, targets);
  Rng rng(seed);
  const double u = rng.uniform();
  double cumulative = 0.0;
  for (auto& branch : branches) {
    cumulative += branch.probability;
    if (u < cumulative) return std::move(branch);
  }
  return std::move(branches.back());
}

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next_u64() { return engine_(); }

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

}  // namespace clusterndd
