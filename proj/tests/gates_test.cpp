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

#include <gtest/gtest.h>

#include <numbers>

#include "clusterndd/cluster.hpp"
#include "clusterndd/errors.hpp"
#include "clusterndd/ndd.hpp"
#include "test_util.hpp"

using namespace clusterndd;
using test_util::max_abs_diff;
using test_util::random_state;
using test_util::to_vec;

TEST(NamedGate, Matrices) {
  const double r = std::numbers::sqrt2 / 2;
  const Amplitude i{0, 1};
  EXPECT_EQ(gate_matrix(GateName::H), (Matrix2{r, r, r, -r}));
  EXPECT_EQ(gate_matrix(GateName::X), (Matrix2{0.0, 1.0, 1.0, 0.0}));
  EXPECT_EQ(gate_matrix(GateName::Y), (Matrix2{0.0, -i, i, 0.0}));
  EXPECT_EQ(gate_matrix(GateName::Z), (Matrix2{1.0, 0.0, 0.0, -1.0}));
  EXPECT_THROW(named_gate("T", 1), ArgumentError);
}

TEST(GateApplication, RejectsBadConstruction) {
  EXPECT_THROW(GateApplication({1.0, 1.0, 0.0, 1.0}, 1), ValidationError);
  EXPECT_THROW(GateApplication(gate_matrix(GateName::X), 1, {1}), ArgumentError);
  EXPECT_THROW(GateApplication(gate_matrix(GateName::X), 1, {2}, {2}), ArgumentError);
  EXPECT_THROW(GateApplication(gate_matrix(GateName::X), 0), ArgumentError);
  EXPECT_THROW(GateApplication(gate_matrix(GateName::X), 1, {2, 2}), ArgumentError);
  EXPECT_THROW(cnot(2, 2), ArgumentError);
}

TEST(NamedGate, Involutions) {
  std::mt19937_64 rng(10);
  for (GateName g : {GateName::H, GateName::X, GateName::Y, GateName::Z}) {
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 1 + trial % 4;
      const int target = 1 + trial % n;
      const StateVector s = random_state(n, rng);
      const StateVector twice = apply_gate(apply_gate(s, named_gate(g, target)), named_gate(g, target));
      EXPECT_LT(max_abs_diff(to_vec(twice), to_vec(s)), 1e-10);
    }
  }
}

TEST(NamedGate, ControlledZIsSymmetric) {
  std::mt19937_64 rng(11);
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      if (a == b) continue;
      const StateVector s = random_state(4, rng);
      EXPECT_LT(max_abs_diff(to_vec(apply_gate(s, cz(a, b))), to_vec(apply_gate(s, cz(b, a)))), 1e-12);
    }
  }
  EXPECT_EQ(apply_gate(basis_state(2, "11"), cz(1, 2))[0b11], Amplitude(-1.0));
}

TEST(Swap, TruthTable) {
  Circuit c(2);
  c.add(swap(1, 2));
  EXPECT_EQ(c.ops().size(), 3u);
  EXPECT_EQ(run_circuit(c, basis_state(2, "10"))[0b01], Amplitude(1.0));
  EXPECT_THROW(swap(1, 1), ArgumentError);
}

TEST(Swap, ConjugationExchangesQubits) {
  std::mt19937_64 rng(12);
  for (GateName g : {GateName::H, GateName::X, GateName::Y, GateName::Z}) {
    for (int trial = 0; trial < 10; ++trial) {
      const int n = 3;
      const StateVector s = random_state(n, rng);
      Circuit conj(n);
      conj.add(swap(1, 3)).add(named_gate(g, 1)).add(swap(1, 3));
      EXPECT_LT(max_abs_diff(to_vec(run_circuit(conj, s)), to_vec(apply_gate(s, named_gate(g, 3)))), 1e-10);
    }
  }
}

TEST(Circuit, RejectsOutOfRangeOps) {
  Circuit c(2);
  EXPECT_THROW(c.add(cnot(1, 3)), ArgumentError);
  EXPECT_THROW(Circuit(0), ArgumentError);
  EXPECT_THROW(Circuit(25), CapacityError);
}

TEST(RunCircuit, EmptyIsIdentity) {
  std::mt19937_64 rng(13);
  const StateVector s = random_state(3, rng);
  EXPECT_EQ(max_abs_diff(to_vec(run_circuit(Circuit(3), s)), to_vec(s)), 0.0);
  EXPECT_THROW(run_circuit(Circuit(2), s), ArgumentError);
}

TEST(RunCircuit, BellPreparation) {
  Circuit c(2);
  c.add(named_gate(GateName::H, 1)).add(cnot(1, 2));
  const StateVector out = run_circuit(c, basis_state(2, "00"));
  const double r = std::numbers::sqrt2 / 2;
  EXPECT_NEAR(out[0b00].real(), r, 1e-15);
  EXPECT_NEAR(out[0b11].real(), r, 1e-15);
  EXPECT_NEAR(std::abs(out[0b01]) + std::abs(out[0b10]), 0.0, 1e-15);
}

TEST(RunCircuit, InverseUndoes) {
  std::mt19937_64 rng(14);
  const Circuit gen = reference_generator(Family::C5);
  const StateVector s = random_state(5, rng);
  EXPECT_LT(max_abs_diff(to_vec(run_circuit(gen.inverse(), run_circuit(gen, s))), to_vec(s)), 1e-12);
}

TEST(VerifyCircuitUnitary, EmptyCircuitPasses) {
  const auto report = verify_circuit_unitary(Circuit(2));
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.worst_deviation, 0.0);
}

// The library checks columns by running the circuit; the oracle multiplies
// dense matrices and forms U^dagger U directly.
TEST(VerifyCircuitUnitary, GeneratorMatchesDenseGram) {
  const Circuit gen = reference_generator(Family::C4);
  EXPECT_TRUE(verify_circuit_unitary(gen).pass);
  oracle::Mat u = oracle::identity(16);
  const oracle::Mat h = oracle::hadamard(), x = oracle::pauli('X'), z = oracle::pauli('Z');
  for (const auto& step : {oracle::controlled(4, h, 1, {}, {}), oracle::controlled(4, h, 3, {}, {}),
                           oracle::controlled(4, x, 2, {1}, {}), oracle::controlled(4, x, 4, {3}, {}),
                           oracle::controlled(4, z, 3, {2}, {})}) {
    u = oracle::matmul(step, u);
  }
  const oracle::Mat g = oracle::matmul(oracle::adjoint(u), u);
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) EXPECT_NEAR(std::abs(g[i][j] - (i == j ? 1.0 : 0.0)), 0.0, 1e-12);
  // and the circuit's columns are exactly this matrix's columns
  for (std::size_t k = 0; k < 16; ++k) {
    const auto col = to_vec(run_circuit(gen, basis_state(4, index_to_bits(k, 4))));
    for (std::size_t i = 0; i < 16; ++i) EXPECT_NEAR(std::abs(col[i] - u[i][k]), 0.0, 1e-12);
  }
}

TEST(VerifyCircuitUnitary, EveryShippedCircuitPasses) {
  for (Family f : {Family::C4, Family::C5}) {
    EXPECT_TRUE(verify_circuit_unitary(reference_generator(f)).pass);
    EXPECT_TRUE(verify_circuit_unitary(ndd_circuit(f).circuit).pass);
  }
}

// Any circuit assembled from named constructors is unitary.
TEST(VerifyCircuitUnitary, RandomNamedCircuits) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 4;
    std::uniform_int_distribution<int> q(1, n);
    Circuit c(n);
    for (int k = 0; k < 12; ++k) {
      int a = q(rng), b = q(rng);
      while (b == a) b = q(rng);
      switch (rng() % 6) {
        case 0: c.add(named_gate(GateName::H, a)); break;
        case 1: c.add(named_gate(GateName::Y, a)); break;
        case 2: c.add(cnot(a, b)); break;
        case 3: c.add(cz(a, b)); break;
        case 4: c.add(swap(a, b)); break;
        default: c.add(named_gate(GateName::X, a).controlled({}, {b})); break;
      }
    }
    EXPECT_TRUE(verify_circuit_unitary(c).pass);
  }
}

TEST(CircuitText, ParsesShorthandsAndControls) {
  const Circuit c = parse_circuit(R"(
    # Bell pair, then an open-controlled flip
    H 1
    CNOT 1 2
    X 3 -1 +2   # fires when q1=0, q2=1
    CZ 2 3
    SWAP 1 3
  )", 3);
  ASSERT_EQ(c.ops().size(), 7u);
  EXPECT_EQ(c.ops()[2].target(), 3);
  EXPECT_EQ(c.ops()[2].positive_controls(), std::vector<int>{2});
  EXPECT_EQ(c.ops()[2].negative_controls(), std::vector<int>{1});
}

TEST(CircuitText, RoundTrip) {
  const Circuit c = ndd_circuit(Family::C4).circuit;
  const Circuit back = parse_circuit(format_circuit(c), c.n_qubits());
  ASSERT_EQ(back.ops().size(), c.ops().size());
  std::mt19937_64 rng(16);
  const StateVector s = random_state(8, rng);
  EXPECT_LT(max_abs_diff(to_vec(run_circuit(back, s)), to_vec(run_circuit(c, s))), 1e-15);
}

TEST(CircuitText, Errors) {
  EXPECT_THROW(parse_circuit("T 1", 2), ArgumentError);
  EXPECT_THROW(parse_circuit("X", 2), ArgumentError);
  EXPECT_THROW(parse_circuit("X 1 2", 2), ArgumentError);
  EXPECT_THROW(parse_circuit("X 3", 2), ArgumentError);
  EXPECT_THROW(parse_circuit("CNOT 1", 2), ArgumentError);
  EXPECT_THROW(parse_circuit("X 1 +1", 2), ArgumentError);
  EXPECT_THROW(parse_circuit("X 1 +x", 2), ArgumentError);
}
