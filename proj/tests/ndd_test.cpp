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

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "clusterndd/errors.hpp"
#include "test_util.hpp"

using namespace clusterndd;
using test_util::to_vec;

namespace {

oracle::Vec oracle_row(Family f, const std::string& label) {
  if (f == Family::C5) return oracle::repaired_table_2_row(label);
  for (const auto& r : oracle::printed_table_1()) {
    if (label == r.label) return oracle::row_vector(4, r.kets);
  }
  throw std::invalid_argument(label);
}

std::vector<oracle::Vec> oracle_family(Family f) {
  std::vector<oracle::Vec> rows;
  for (const auto& label : all_bitstrings(family_info(f).n_data)) rows.push_back(oracle_row(f, label));
  return rows;
}

StateVector superpose(Family f, const std::vector<std::pair<std::string, oracle::C>>& terms) {
  const int n = family_info(f).n_data;
  oracle::Vec v(std::size_t{1} << n);
  for (const auto& [label, c] : terms) {
    const oracle::Vec r = oracle_row(f, label);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * r[i];
  }
  return test_util::from_vec(n, v);
}

}  // namespace

TEST(NddCircuit, Shape) {
  for (Family f : {Family::C4, Family::C5}) {
    const NddCircuit& c = ndd_circuit(f);
    const int n = family_info(f).n_data;
    EXPECT_EQ(c.total_qubits, 2 * n);
    EXPECT_EQ(c.circuit.n_qubits(), 2 * n);
    EXPECT_EQ(c.ancillas().front(), n + 1);
    EXPECT_EQ(c.ancillas().back(), 2 * n);
    for (const auto& op : c.circuit.ops()) {
      EXPECT_TRUE(op.label() == "H" || op.label() == "CNOT" || op.label() == "CZ") << op.label();
      EXPECT_TRUE(op.negative_controls().empty());
    }
  }
}

// Each table row is a joint eigenstate of the checks, with eigenvalue -1
// exactly where its label has a 1. Checked with dense Pauli matrices.
TEST(NddChecks, RowsAreJointEigenstates) {
  for (Family f : {Family::C4, Family::C5}) {
    const int n = family_info(f).n_data;
    const auto& checks = ndd_checks(f);
    ASSERT_EQ(checks.size(), static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < checks.size(); ++k) {
      std::vector<oracle::Mat> factors;
      for (char p : checks[k].word(n)) factors.push_back(oracle::pauli(p));
      const oracle::Mat obs = oracle::local(factors);
      for (const auto& label : all_bitstrings(n)) {
        const oracle::Vec row = oracle_row(f, label);
        const oracle::Vec image = oracle::apply(obs, row);
        const double eigen = label[k] == '1' ? -1.0 : 1.0;
        EXPECT_LT(test_util::max_abs_diff(image, [&] {
          oracle::Vec scaled = row;
          for (auto& a : scaled) a *= eigen;
          return scaled;
        }()), 1e-12) << label << " check " << k;
      }
    }
  }
  EXPECT_EQ(ndd_checks(Family::C4)[1].word(4), "XXIZ");
  EXPECT_EQ(ndd_checks(Family::C5)[2].word(5), "XXXIX");
}

TEST(BranchNdd, EveryRowIsDeterministicAndPreserved) {
  for (Family f : {Family::C4, Family::C5}) {
    for (const auto& label : all_bitstrings(family_info(f).n_data)) {
      const StateVector row = table_state(f, label);
      const auto out = branch_ndd(row, f);
      ASSERT_EQ(out.size(), 1u) << label;
      EXPECT_EQ(out[0].label, label);
      EXPECT_NEAR(out[0].probability, 1.0, 1e-10);
      EXPECT_NEAR(fidelity_up_to_phase(out[0].post_state, row), 1.0, 1e-10);
    }
  }
}

TEST(BranchNdd, PrintedExamples) {
  EXPECT_EQ(branch_ndd(table_state(Family::C4, "0000"), Family::C4).at(0).label, "0000");
  EXPECT_EQ(branch_ndd(table_state(Family::C4, "1111"), Family::C4).at(0).label, "1111");
  EXPECT_EQ(branch_ndd(table_state(Family::C5, "11111"), Family::C5).at(0).label, "11111");
  EXPECT_EQ(branch_ndd(table_state(Family::C5, "00010"), Family::C5).at(0).label, "00010");
}

TEST(RunNdd, RowInput) {
  const StateVector row = table_state(Family::C4, "0101");
  const NddOutcome o = run_ndd(row, Family::C4, 99);
  EXPECT_EQ(o.label, "0101");
  EXPECT_NEAR(o.probability, 1.0, 1e-10);
  EXPECT_NEAR(fidelity_up_to_phase(o.post_state, row), 1.0, 1e-10);
}

TEST(RunNdd, EqualSuperpositionSamplesBothRows) {
  const double r = 1 / std::sqrt(2.0);
  const StateVector s = superpose(Family::C4, {{"0000", r}, {"0001", r}});
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    const NddOutcome o = run_ndd(s, Family::C4, seed);
    EXPECT_NEAR(o.probability, 0.5, 1e-10);
    EXPECT_NEAR(fidelity_up_to_phase(o.post_state, table_state(Family::C4, o.label)), 1.0, 1e-10);
    seen.insert(o.label);
    EXPECT_EQ(run_ndd(s, Family::C4, seed).label, o.label);
  }
  EXPECT_EQ(seen, (std::set<std::string>{"0000", "0001"}));
}

TEST(RunNdd, BitFlipMovesToAnotherRow) {
  // oracle: X on qubit 1 of the printed row 0000, matched against all rows
  const oracle::Mat x1 = oracle::local({oracle::pauli('X'), oracle::pauli('I'), oracle::pauli('I'), oracle::pauli('I')});
  const oracle::Vec flipped = oracle::apply(x1, oracle_row(Family::C4, "0000"));
  std::string expected;
  for (const auto& label : all_bitstrings(4)) {
    if (oracle::fidelity(oracle_row(Family::C4, label), flipped) > 1 - 1e-10) expected = label;
  }
  ASSERT_EQ(expected, "1001");

  const NddOutcome o = run_ndd(test_util::from_vec(4, flipped), Family::C4, 3);
  EXPECT_EQ(o.label, expected);
  EXPECT_NEAR(o.probability, 1.0, 1e-10);
}

TEST(BranchNdd, UniformSuperpositionOfAllRows) {
  std::vector<std::pair<std::string, oracle::C>> terms;
  for (const auto& label : all_bitstrings(4)) terms.emplace_back(label, 0.25);
  const auto out = branch_ndd(superpose(Family::C4, terms), Family::C4);
  ASSERT_EQ(out.size(), 16u);
  for (const auto& o : out) EXPECT_NEAR(o.probability, 1.0 / 16, 1e-10);
}

TEST(BranchNdd, WeightedPair) {
  const auto out = branch_ndd(superpose(Family::C4, {{"0110", 0.6}, {"1011", 0.8}}), Family::C4);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].label, "0110");
  EXPECT_NEAR(out[0].probability, 0.36, 1e-10);
  EXPECT_EQ(out[1].label, "1011");
  EXPECT_NEAR(out[1].probability, 0.64, 1e-10);
}

TEST(BranchNdd, BornRuleOnRandomSuperpositions) {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> g;
  for (Family f : {Family::C4, Family::C5}) {
    const auto labels = all_bitstrings(family_info(f).n_data);
    const auto rows = oracle_family(f);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<std::pair<std::string, oracle::C>> terms;
      const int k = 2 + trial % 3;
      std::set<std::size_t> picked;
      while (static_cast<int>(picked.size()) < k) picked.insert(rng() % labels.size());
      for (auto idx : picked) terms.emplace_back(labels[idx], oracle::C(g(rng), g(rng)));
      const StateVector s = superpose(f, terms);
      const auto expected = oracle::projector_probabilities(rows, to_vec(s));
      const auto out = branch_ndd(s, f);
      EXPECT_EQ(out.size(), picked.size());
      double total = 0;
      for (const auto& o : out) {
        total += o.probability;
        EXPECT_NEAR(o.probability, expected[bits_to_index(o.label)], 1e-10);
        EXPECT_NEAR(oracle::fidelity(to_vec(o.post_state), rows[bits_to_index(o.label)]), 1.0, 1e-10);
      }
      EXPECT_NEAR(total, 1.0, 1e-12);
    }
  }
}

TEST(BranchNdd, ArbitraryInputsFollowBornRule) {
  std::mt19937_64 rng(22);
  for (Family f : {Family::C4, Family::C5}) {
    const auto rows = oracle_family(f);
    const StateVector s = test_util::random_state(family_info(f).n_data, rng);
    const auto expected = oracle::projector_probabilities(rows, to_vec(s));
    for (const auto& o : branch_ndd(s, f)) {
      EXPECT_NEAR(o.probability, expected[bits_to_index(o.label)], 1e-10);
    }
  }
}

TEST(BranchNdd, ProjectiveIdempotence) {
  std::mt19937_64 rng(23);
  for (Family f : {Family::C4, Family::C5}) {
    const StateVector s = test_util::random_state(family_info(f).n_data, rng);
    for (const auto& first : branch_ndd(s, f)) {
      const auto second = branch_ndd(first.post_state, f);
      ASSERT_EQ(second.size(), 1u);
      EXPECT_EQ(second[0].label, first.label);
      EXPECT_NEAR(fidelity_up_to_phase(second[0].post_state, first.post_state), 1.0, 1e-10);
    }
  }
}

TEST(BranchNdd, AncillasDisentangleAfterMeasurement) {
  std::mt19937_64 rng(24);
  for (Family f : {Family::C4, Family::C5}) {
    const int n = family_info(f).n_data;
    const StateVector s = test_util::random_state(n, rng);
    const StateVector joint =
        run_circuit(ndd_circuit(f).circuit, tensor(s, basis_state(n, std::string(static_cast<std::size_t>(n), '0'))));
    const auto joint_branches = branch_enumerate(joint, ndd_circuit(f).ancillas());
    const auto outcomes = branch_ndd(s, f);
    ASSERT_EQ(joint_branches.size(), outcomes.size());
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
      const StateVector product = tensor(outcomes[k].post_state, basis_state(n, outcomes[k].label));
      EXPECT_NEAR(fidelity_up_to_phase(product, joint_branches[k].post_state), 1.0, 1e-10);
    }
  }
}

TEST(BranchNdd, Errors) {
  EXPECT_THROW(branch_ndd(basis_state(3, "000"), Family::C4), ArgumentError);
  EXPECT_THROW(run_ndd(basis_state(4, "0000"), Family::C5, 0), ArgumentError);
  EXPECT_THROW(branch_ndd(table_state(Family::C5, "00000"), Family::C5, TableMode::Verbatim), ConfigurationError);
  // the printed C4 table is orthonormal, so verbatim mode is accepted there
  EXPECT_EQ(branch_ndd(table_state(Family::C4, "0011"), Family::C4, TableMode::Verbatim).at(0).label, "0011");
}
