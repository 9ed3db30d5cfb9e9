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
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "clusterndd/gates.hpp"
#include "clusterndd/qstate.hpp"

namespace clusterndd {

enum class Family { C4, C5 };

struct FamilyInfo {
  std::string_view name;  // "C4" / "C5"
  int n_data;
  int n_rows;
};

FamilyInfo family_info(Family family);
Family parse_family(std::string_view name);  // "c4", "C5", ...

enum class TableMode { Verbatim, Repaired };

struct SignedKet {
  std::string ket;
  int sign;  // +1 or -1

  bool operator==(const SignedKet&) const = default;
};

// One printed row: the ancilla label and four kets, each with coefficient
// sign/2.
struct TableRow {
  std::string label;
  std::array<SignedKet, 4> terms;

  bool operator==(const TableRow&) const = default;
};

class ClusterTable {
 public:
  ClusterTable(Family family, std::vector<TableRow> rows);

  Family family() const { return family_; }
  int n_data() const { return family_info(family_).n_data; }
  const std::vector<TableRow>& rows() const { return rows_; }

  // Throws ArgumentError for an unknown label.
  const TableRow& row(std::string_view label) const;
  StateVector state(std::string_view label) const;

 private:
  Family family_;
  std::vector<TableRow> rows_;  // sorted by label
};

// Parses "label : +ket -ket +ket +ket" lines. Rows must cover every label
// of the family exactly once, kets within a row must be distinct, and the
// first printed term must carry a + sign.
ClusterTable parse_table(std::string_view text, Family family);

// Raw text of the table compiled from data/.
std::string_view embedded_table_text(Family family);
std::uint64_t embedded_table_digest(Family family);
// Hard-coded digest of the table as published; a mismatch means the data
// files were edited.
std::uint64_t expected_table_digest(Family family);
// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view text);

struct NonOrthogonalPair {
  std::string label_a;
  std::string label_b;
  Amplitude inner_product;
};

struct SignRepair {
  std::string label;
  std::string ket;
  int new_sign;
};

struct AuditReport {
  Family family;
  std::vector<NonOrthogonalPair> non_orthogonal_pairs;
  // One entry per defective support block that a single sign flip repairs
  // in exactly one way.
  std::vector<SignRepair> suggested_repairs;
  // Defective blocks with no unique single-flip repair, by first label.
  std::vector<std::string> unrepaired_blocks;

  bool clean() const { return non_orthogonal_pairs.empty(); }
};

// Pairwise inner products of all rows; flags |<a|b>| > kTolerance. Rows that
// share the same set of four kets form a block; each defective block is
// searched exhaustively over single sign flips.
AuditReport audit_orthogonality(const ClusterTable& table);
AuditReport audit_orthogonality(Family family);

ClusterTable apply_repairs(const ClusterTable& table, const std::vector<SignRepair>& repairs);

const ClusterTable& verbatim_table(Family family);
// The verbatim table with its audit's suggested repairs applied. Throws
// ContractViolation if defects remain.
const ClusterTable& repaired_table(Family family);
ClusterTable repaired(const ClusterTable& table);

const ClusterTable& table(Family family, TableMode mode);

StateVector table_state(Family family, std::string_view label,
                        TableMode mode = TableMode::Repaired);

// Hadamards on qubits 1 and 3, CNOT 1->2 and 3->4, then CZ(2,3) for C4;
// for C5, CNOT 3->5 and 1->4 take the place of the CZ.
Circuit reference_generator(Family family);

StateVector generate(Family family, std::string_view input_bits);

// The canonical cluster state: generate(family, all zeros).
StateVector canonical_state(Family family);

// For every computational input, the label of the repaired row that
// generate() reproduces up to phase. Throws ContractViolation if an output
// matches no row or two inputs land on the same row.
std::map<std::string, std::string> input_to_row_map(Family family);

std::vector<std::string> all_bitstrings(int width);

}  // namespace clusterndd
