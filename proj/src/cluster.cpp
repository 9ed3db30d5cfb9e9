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

#include "clusterndd/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "clusterndd/errors.hpp"
#include "state_access.hpp"

namespace clusterndd {
namespace detail {
extern const std::string_view kTableC4Text;
extern const std::string_view kTableC5Text;
}  // namespace detail

FamilyInfo family_info(Family family) {
  switch (family) {
    case Family::C4: return {"C4", 4, 16};
    case Family::C5: return {"C5", 5, 32};
  }
  throw ArgumentError("unknown family");
}

Family parse_family(std::string_view name) {
  if (name == "c4" || name == "C4") return Family::C4;
  if (name == "c5" || name == "C5") return Family::C5;
  throw ArgumentError("unknown family '" + std::string(name) + "' (expected c4 or c5)");
}

std::vector<std::string> all_bitstrings(int width) {
  std::vector<std::string> out;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << width); ++i) out.push_back(index_to_bits(i, width));
  return out;
}

ClusterTable::ClusterTable(Family family, std::vector<TableRow> rows)
    : family_(family), rows_(std::move(rows)) {
  std::sort(rows_.begin(), rows_.end(),
            [](const TableRow& a, const TableRow& b) { return a.label < b.label; });
}

const TableRow& ClusterTable::row(std::string_view label) const {
  auto it = std::lower_bound(rows_.begin(), rows_.end(), label,
                             [](const TableRow& r, std::string_view l) { return r.label < l; });
  if (it == rows_.end() || it->label != label) {
    throw ArgumentError("no row '" + std::string(label) + "' in table " +
                        std::string(family_info(family_).name));
  }
  return *it;
}

StateVector ClusterTable::state(std::string_view label) const {
  const TableRow& r = row(label);
  const int n = n_data();
  std::vector<Amplitude> amps(std::size_t{1} << n);
  for (const auto& term : r.terms) amps[bits_to_index(term.ket)] += 0.5 * term.sign;
  return StateAccess::make(n, std::move(amps));
}

ClusterTable parse_table(std::string_view text, Family family) {
  const FamilyInfo info = family_info(family);
  const auto width = static_cast<std::size_t>(info.n_data);
  std::vector<TableRow> rows;
  std::istringstream lines{std::string(text)};
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& why) {
    throw ArgumentError("table " + std::string(info.name) + " line " + std::to_string(line_no) +
                        ": " + why);
  };
  while (std::getline(lines, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (words.size() != 6 || words[1] != ":") fail("expected 'label : t1 t2 t3 t4'");

    TableRow row;
    row.label = words[0];
    if (row.label.size() != width || !is_bitstring(row.label)) fail("bad label '" + row.label + "'");
    for (std::size_t k = 0; k < 4; ++k) {
      const std::string& w = words[k + 2];
      if (w.size() != width + 1 || (w[0] != '+' && w[0] != '-') ||
          !is_bitstring(std::string_view(w).substr(1))) {
        fail("bad term '" + w + "'");
      }
      row.terms[k] = {w.substr(1), w[0] == '+' ? 1 : -1};
    }
    std::set<std::string> kets;
    for (const auto& t : row.terms) kets.insert(t.ket);
    if (kets.size() != 4) fail("repeated ket in row " + row.label);
    if (row.terms[0].sign != 1) fail("first term of row " + row.label + " must be positive");
    rows.push_back(std::move(row));
  }

  std::set<std::string> labels;
  for (const auto& r : rows) {
    if (!labels.insert(r.label).second) throw ArgumentError("duplicate row " + r.label);
  }
  if (labels.size() != static_cast<std::size_t>(info.n_rows)) {
    throw ArgumentError("table " + std::string(info.name) + " has " +
                        std::to_string(labels.size()) + " rows, expected " +
                        std::to_string(info.n_rows));
  }
  return ClusterTable(family, std::move(rows));
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string_view embedded_table_text(Family family) {
  return family == Family::C4 ? detail::kTableC4Text : detail::kTableC5Text;
}

std::uint64_t embedded_table_digest(Family family) {
  return fnv1a64(embedded_table_text(family));
}

std::uint64_t expected_table_digest(Family family) {
  return family == Family::C4 ? 0xc6e7597f0fe212d1ULL : 0x1c33bcffea641602ULL;
}

namespace {

std::vector<NonOrthogonalPair> find_defects(const ClusterTable& table) {
  std::vector<StateVector> states;
  for (const auto& r : table.rows()) states.push_back(table.state(r.label));
  std::vector<NonOrthogonalPair> out;
  const auto& rows = table.rows();
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      const Amplitude ip = inner_product(states[a], states[b]);
      if (std::abs(ip) > kTolerance) out.push_back({rows[a].label, rows[b].label, ip});
    }
  }
  return out;
}

std::set<std::string> ket_support(const TableRow& row) {
  std::set<std::string> s;
  for (const auto& t : row.terms) s.insert(t.ket);
  return s;
}

}  // namespace

ClusterTable apply_repairs(const ClusterTable& table, const std::vector<SignRepair>& repairs) {
  std::vector<TableRow> rows = table.rows();
  for (const auto& fix : repairs) {
    auto row = std::find_if(rows.begin(), rows.end(),
                            [&](const TableRow& r) { return r.label == fix.label; });
    if (row == rows.end()) throw ArgumentError("repair names unknown row " + fix.label);
    auto term = std::find_if(row->terms.begin(), row->terms.end(),
                             [&](const SignedKet& t) { return t.ket == fix.ket; });
    if (term == row->terms.end()) {
      throw ArgumentError("row " + fix.label + " has no ket " + fix.ket);
    }
    term->sign = fix.new_sign;
  }
  return ClusterTable(table.family(), std::move(rows));
}

AuditReport audit_orthogonality(const ClusterTable& table) {
  AuditReport report{table.family(), find_defects(table), {}, {}};
  if (report.clean()) return report;

  // Group rows by ket support; a block is defective if any of its rows
  // appears in a flagged pair.
  std::map<std::set<std::string>, std::vector<std::string>> blocks;
  for (const auto& r : table.rows()) blocks[ket_support(r)].push_back(r.label);
  std::set<std::string> defective_rows;
  for (const auto& p : report.non_orthogonal_pairs) {
    defective_rows.insert(p.label_a);
    defective_rows.insert(p.label_b);
  }

  for (const auto& [support, labels] : blocks) {
    const bool defective = std::any_of(labels.begin(), labels.end(),
                                       [&](const std::string& l) { return defective_rows.count(l) > 0; });
    if (!defective) continue;
    std::vector<SignRepair> fixes;
    for (const auto& label : labels) {
      for (const auto& term : table.row(label).terms) {
        const SignRepair candidate{label, term.ket, -term.sign};
        const auto remaining = find_defects(apply_repairs(table, {candidate}));
        const bool block_clean =
            std::none_of(remaining.begin(), remaining.end(), [&](const NonOrthogonalPair& p) {
              return std::count(labels.begin(), labels.end(), p.label_a) > 0 ||
                     std::count(labels.begin(), labels.end(), p.label_b) > 0;
            });
        if (block_clean) fixes.push_back(candidate);
      }
    }
    if (fixes.size() == 1) {
      report.suggested_repairs.push_back(fixes.front());
    } else {
      report.unrepaired_blocks.push_back(labels.front());
    }
  }
  return report;
}

AuditReport audit_orthogonality(Family family) {
  return audit_orthogonality(verbatim_table(family));
}

ClusterTable repaired(const ClusterTable& table) {
  const AuditReport report = audit_orthogonality(table);
  if (report.clean()) return table;
  ClusterTable fixed = apply_repairs(table, report.suggested_repairs);
  if (!audit_orthogonality(fixed).clean()) {
    throw ContractViolation("table " + std::string(family_info(table.family()).name) +
                            " has defects no unique single-sign repair removes");
  }
  return fixed;
}

const ClusterTable& verbatim_table(Family family) {
  static const ClusterTable c4 = parse_table(detail::kTableC4Text, Family::C4);
  static const ClusterTable c5 = parse_table(detail::kTableC5Text, Family::C5);
  return family == Family::C4 ? c4 : c5;
}

const ClusterTable& repaired_table(Family family) {
  static const ClusterTable c4 = repaired(verbatim_table(Family::C4));
  static const ClusterTable c5 = repaired(verbatim_table(Family::C5));
  return family == Family::C4 ? c4 : c5;
}

const ClusterTable& table(Family family, TableMode mode) {
  return mode == TableMode::Verbatim ? verbatim_table(family) : repaired_table(family);
}

StateVector table_state(Family family, std::string_view label, TableMode mode) {
  return table(family, mode).state(label);
}

Circuit reference_generator(Family family) {
  Circuit c(family_info(family).n_data);
  c.add(named_gate(GateName::H, 1)).add(named_gate(GateName::H, 3)).add(cnot(1, 2)).add(cnot(3, 4));
  if (family == Family::C4) {
    c.add(cz(2, 3));
  } else {
    c.add(cnot(3, 5)).add(cnot(1, 4));
  }
  return c;
}

StateVector generate(Family family, std::string_view input_bits) {
  const int n = family_info(family).n_data;
  if (input_bits.size() != static_cast<std::size_t>(n) || !is_bitstring(input_bits)) {
    throw ArgumentError("input '" + std::string(input_bits) + "' is not a " + std::to_string(n) +
                        "-bit string");
  }
  return run_circuit(reference_generator(family), basis_state(n, input_bits));
}

StateVector canonical_state(Family family) {
  return generate(family, std::string(static_cast<std::size_t>(family_info(family).n_data), '0'));
}

std::map<std::string, std::string> input_to_row_map(Family family) {
  const ClusterTable& rows = repaired_table(family);
  std::map<std::string, std::string> map;
  std::set<std::string> used;
  for (const auto& input : all_bitstrings(rows.n_data())) {
    const StateVector out = generate(family, input);
    std::string match;
    for (const auto& r : rows.rows()) {
      if (fidelity_up_to_phase(out, rows.state(r.label)) > 1.0 - kTolerance) {
        match = r.label;
        break;
      }
    }
    if (match.empty()) {
      throw ContractViolation("generator output for input " + input + " matches no table row");
    }
    if (!used.insert(match).second) {
      throw ContractViolation("inputs collide on table row " + match);
    }
    map.emplace(input, match);
  }
  return map;
}

}  // namespace clusterndd
