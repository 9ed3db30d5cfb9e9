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

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clusterndd {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 24;
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kTolerance = 1e-10;

// Qubits are numbered from 1 at every API boundary. Qubit 1 is the most
// significant bit of the amplitude index, so amps[0b1100] is |1100>.
class StateVector {
 public:
  // Takes ownership of amps. Throws ArgumentError unless amps.size() == 2^n
  // and the squared norm is within kNormTolerance of 1.
  StateVector(int n_qubits, std::vector<Amplitude> amps);

  // Rescales amps to unit norm instead of rejecting them. Zero vectors and
  // non-finite entries are still rejected.
  static StateVector normalized(int n_qubits, std::vector<Amplitude> amps);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Amplitude> amps() const { return amps_; }
  const Amplitude& operator[](std::size_t index) const { return amps_[index]; }

  double norm_squared() const;

 private:
  struct Unchecked {};
  StateVector(Unchecked, int n_qubits, std::vector<Amplitude> amps)
      : n_qubits_(n_qubits), amps_(std::move(amps)) {}

  friend struct StateAccess;

  int n_qubits_ = 0;
  std::vector<Amplitude> amps_;
};

// Bit mask of qubit q (1-based) in an n-qubit index.
constexpr std::uint64_t qubit_mask(int n_qubits, int qubit) {
  return std::uint64_t{1} << (n_qubits - qubit);
}

std::string index_to_bits(std::uint64_t index, int width);
std::uint64_t bits_to_index(std::string_view bits);
bool is_bitstring(std::string_view bits);

StateVector basis_state(int n_qubits, std::string_view bits);

// Tensor product a (x) b; a's qubits come first.
StateVector tensor(const StateVector& a, const StateVector& b);

class GateApplication;

StateVector apply_gate(const StateVector& state, const GateApplication& gate);

// <a|b>, conjugate-linear in a.
Amplitude inner_product(const StateVector& a, const StateVector& b);

// |<a|b>|^2. Equals 1 iff a and b agree up to a global phase.
double fidelity_up_to_phase(const StateVector& a, const StateVector& b);

struct MeasurementBranch {
  std::string bits;  // one character per target, in target order
  double probability;
  StateVector post_state;
};

// Every outcome of a projective Z measurement of `targets` with probability
// above kNormTolerance, ordered by outcome bitstring.
std::vector<MeasurementBranch> branch_enumerate(const StateVector& state,
                                                std::span<const int> targets);

// Samples one outcome by the Born rule. The same (state, targets, seed)
// always yields the same branch; see Rng.
MeasurementBranch measure(const StateVector& state,
                          std::span<const int> targets, std::uint64_t seed);

// 64-bit Mersenne Twister (std::mt19937_64). Uniform doubles take the top
// 53 bits of one draw, so sampling is identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next_u64();
  double uniform();  // [0, 1)

 private:
  std::mt19937_64 engine_;
};

}  // namespace clusterndd
