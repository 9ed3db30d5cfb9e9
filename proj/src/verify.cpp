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

#include "clusterndd/verify.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "clusterndd/cluster.hpp"
#include "clusterndd/errors.hpp"
#include "clusterndd/gates.hpp"
#include "clusterndd/ndd.hpp"
#include "clusterndd/protocols.hpp"
#include "clusterndd/qstate.hpp"

namespace clusterndd {
namespace {

class Group {
 public:
  explicit Group(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    result_.details.push_back((ok ? "ok   " : "FAIL ") + what);
    result_.pass = result_.pass && ok;
  }
  void note(const std::string& what) { result_.details.push_back("     " + what); }

  GroupResult done() { return std::move(result_); }

 private:
  GroupResult result_;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

StateVector random_state(int n, Rng& rng) {
  std::vector<Amplitude> amps(std::size_t{1} << n);
  for (auto& a : amps) a = {rng.uniform() - 0.5, rng.uniform() - 0.5};
  return StateVector::normalized(n, std::move(amps));
}

GateApplication random_gate(int n, Rng& rng) {
  const auto pick = [&](int bound) { return 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(bound)); };
  static constexpr GateName kNames[] = {GateName::H, GateName::X, GateName::Y, GateName::Z};
  const int target = pick(n);
  std::vector<int> pos, neg;
  for (int q = 1; q <= n; ++q) {
    if (q == target) continue;
    switch (rng.next_u64() % 3) {
      case 1: pos.push_back(q); break;
      case 2: neg.push_back(q); break;
      default: break;
    }
  }
  return named_gate(kNames[rng.next_u64() % 4], target).controlled(pos, neg);
}

double max_diff(const StateVector& a, const StateVector& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GroupResult tables_group(const VerifyOptions& options) {
  Group g("tables");
  for (Family f : {Family::C4, Family::C5}) {
    const std::string name(family_info(f).name);
    std::string text(embedded_table_text(f));
    if (options.tables_dir) {
      const std::string file = f == Family::C4 ? "table_c4.txt" : "table_c5.txt";
      text = read_file(*options.tables_dir / file);
    }
    g.check(fnv1a64(text) == expected_table_digest(f), name + " table digest matches");
    std::optional<ClusterTable> parsed;
    try {
      parsed = parse_table(text, f);
    } catch (const ArgumentError& e) {
      g.check(false, name + " table parses: " + e.what());
      continue;
    }
    const AuditReport report = audit_orthogonality(*parsed);
    if (f == Family::C4) {
      g.check(report.clean(), "C4 printed rows are pairwise orthogonal (" +
                                  std::to_string(report.non_orthogonal_pairs.size()) + " defects)");
      continue;
    }
    std::set<std::string> partners;
    bool halves = true;
    for (const auto& p : report.non_orthogonal_pairs) {
      if (p.label_a != "00010" && p.label_b != "00010") halves = false;
      partners.insert(p.label_a == "00010" ? p.label_b : p.label_a);
      halves = halves && std::abs(std::abs(p.inner_product) - 0.5) <= kTolerance;
    }
    g.check(!report.clean() && halves && partners.count("00011") && partners.count("00110"),
            "C5 printed defects are confined to row 00010 with |<a|b>| = 1/2 (" +
                std::to_string(report.non_orthogonal_pairs.size()) + " pairs)");
    const bool unique_fix = report.suggested_repairs.size() == 1 &&
                            report.suggested_repairs[0].label == "00010" &&
                            report.suggested_repairs[0].ket == "11000" &&
                            report.suggested_repairs[0].new_sign == 1;
    g.check(unique_fix, "C5 unique single-sign repair is +|11000> in row 00010");
    if (unique_fix) g.check(audit_orthogonality(apply_repairs(*parsed, report.suggested_repairs)).clean(),
                            "C5 repaired rows are pairwise orthogonal");
  }
  return g.done();
}

GroupResult kernel_group() {
  Group g("kernel");
  Rng rng(20260101);
  double norm_dev = 0, unitary_dev = 0, linear_dev = 0, prob_dev = 0;
  bool seeds_ok = true;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 6;
    const StateVector a = random_state(n, rng);
    const StateVector b = random_state(n, rng);
    const GateApplication gate = random_gate(n, rng);
    const StateVector ga = apply_gate(a, gate);
    norm_dev = std::max(norm_dev, std::abs(ga.norm_squared() - 1.0));
    unitary_dev = std::max(unitary_dev, max_diff(apply_gate(ga, gate.inverse()), a));

    const Amplitude alpha{0.6, 0.2}, beta{-0.3, 0.7};
    std::vector<Amplitude> mix(a.dim()), mixed_out(a.dim());
    const StateVector gb = apply_gate(b, gate);
    for (std::size_t i = 0; i < a.dim(); ++i) mix[i] = alpha * a[i] + beta * b[i];
    const double scale = std::sqrt(std::accumulate(mix.begin(), mix.end(), 0.0,
                                                   [](double s, Amplitude x) { return s + std::norm(x); }));
    const StateVector combined = apply_gate(StateVector::normalized(n, mix), gate);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      linear_dev = std::max(linear_dev, std::abs(combined[i] * scale - (alpha * ga[i] + beta * gb[i])));
    }

    std::vector<int> targets;
    for (int q = 1; q <= n; q += 2) targets.push_back(q);
    double total = 0;
    for (const auto& br : branch_enumerate(a, targets)) {
      total += br.probability;
      prob_dev = std::max(prob_dev, std::abs(br.post_state.norm_squared() - 1.0));
    }
    prob_dev = std::max(prob_dev, std::abs(total - 1.0));
    const auto m1 = measure(a, targets, static_cast<std::uint64_t>(trial));
    const auto m2 = measure(a, targets, static_cast<std::uint64_t>(trial));
    seeds_ok = seeds_ok && m1.bits == m2.bits && m1.probability == m2.probability &&
               max_diff(m1.post_state, m2.post_state) == 0.0;
  }
  g.check(norm_dev <= kNormTolerance, "normalization preserved (worst " + fmt(norm_dev) + ")");
  g.check(unitary_dev <= kTolerance, "gate then inverse restores input (worst " + fmt(unitary_dev) + ")");
  g.check(linear_dev <= kTolerance, "gate application is linear (worst " + fmt(linear_dev) + ")");
  g.check(prob_dev <= kNormTolerance, "measurement branches complete and normalized (worst " + fmt(prob_dev) + ")");
  g.check(seeds_ok, "equal seeds give identical measurements");

  for (Family f : {Family::C4, Family::C5}) {
    const std::string name(family_info(f).name);
    const auto gen = verify_circuit_unitary(reference_generator(f));
    g.check(gen.pass, name + " generator circuit is unitary (worst " + fmt(gen.worst_deviation) + ")");
    const auto ndd = verify_circuit_unitary(ndd_circuit(f).circuit);
    g.check(ndd.pass, name + " NDD circuit is unitary (worst " + fmt(ndd.worst_deviation) + ")");
  }
  return g.done();
}

// Eq. (1) expanded term by term: qubit a contributes |1>, or |0> together
// with a Z on qubit a+1 (none for the last qubit).
StateVector literal_cluster_expansion(int n) {
  std::vector<Amplitude> amps(std::size_t{1} << n);
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const std::string b = index_to_bits(i, n);
    int sign = 1;
    for (int a = 0; a + 1 < n; ++a) {
      if (b[static_cast<std::size_t>(a)] == '0' && b[static_cast<std::size_t>(a + 1)] == '1') sign = -sign;
    }
    amps[i] = sign / std::pow(2.0, n / 2.0);
  }
  return StateVector(n, std::move(amps));
}

GroupResult generation_group() {
  Group g("generation");
  g.check(fidelity_up_to_phase(generate(Family::C4, "0000"), table_state(Family::C4, "0000")) > 1 - kTolerance,
          "generate(C4, 0000) equals printed row 0000");
  const double eq1 = fidelity_up_to_phase(generate(Family::C4, "0000"), literal_cluster_expansion(4));
  g.check(std::abs(eq1 - 1.0) <= kTolerance,
          "generate(C4, 0000) equals the literal product expansion for N=4 (fidelity " + fmt(eq1) + ")");
  for (Family f : {Family::C4, Family::C5}) {
    const std::string name(family_info(f).name);
    const auto inputs = all_bitstrings(family_info(f).n_data);
    double worst = 0;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      const StateVector a = generate(f, inputs[i]);
      for (std::size_t j = i + 1; j < inputs.size(); ++j) {
        worst = std::max(worst, std::abs(inner_product(a, generate(f, inputs[j]))));
      }
    }
    g.check(worst < kTolerance, name + " generator outputs are mutually orthogonal (worst " + fmt(worst) + ")");
    try {
      const auto map = input_to_row_map(f);
      g.check(map.size() == inputs.size(), name + " input -> row map is a bijection");
    } catch (const ContractViolation& e) {
      g.check(false, name + " input -> row map: " + e.what());
    }
  }
  return g.done();
}

GroupResult ndd_group() {
  Group g("ndd");
  for (Family f : {Family::C4, Family::C5}) {
    const std::string name(family_info(f).name);
    const ClusterTable& rows = repaired_table(f);
    bool deterministic = true, preserved = true, idempotent = true;
    for (const auto& r : rows.rows()) {
      const StateVector s = rows.state(r.label);
      const auto out = branch_ndd(s, f);
      deterministic = deterministic && out.size() == 1 && out[0].label == r.label &&
                      std::abs(out[0].probability - 1.0) <= kTolerance;
      preserved = preserved && std::abs(fidelity_up_to_phase(out[0].post_state, s) - 1.0) <= kTolerance;
      const auto again = branch_ndd(out[0].post_state, f);
      idempotent = idempotent && again.size() == 1 && again[0].label == out[0].label &&
                   std::abs(fidelity_up_to_phase(again[0].post_state, out[0].post_state) - 1.0) <= kTolerance;
    }
    g.check(deterministic, name + " every row yields its own label with probability 1");
    g.check(preserved, name + " post-measurement state equals the input row");
    g.check(idempotent, name + " a second NDD round repeats the label and leaves the state fixed");

    Rng rng(f == Family::C4 ? 404 : 505);
    double worst = 0;
    for (int trial = 0; trial < 25; ++trial) {
      const auto labels = all_bitstrings(rows.n_data());
      std::vector<Amplitude> coeff(labels.size());
      for (int k = 0; k < 3; ++k) coeff[rng.next_u64() % labels.size()] += Amplitude(rng.uniform() - 0.5, rng.uniform() - 0.5);
      double norm = 0;
      for (auto c : coeff) norm += std::norm(c);
      if (norm == 0) continue;
      std::vector<Amplitude> amps(std::size_t{1} << rows.n_data());
      for (std::size_t k = 0; k < labels.size(); ++k) {
        const StateVector r = rows.state(labels[k]);
        for (std::size_t i = 0; i < amps.size(); ++i) amps[i] += coeff[k] / std::sqrt(norm) * r[i];
      }
      const StateVector s = StateVector::normalized(rows.n_data(), amps);
      for (const auto& o : branch_ndd(s, f)) {
        const std::size_t k = bits_to_index(o.label);
        worst = std::max(worst, std::abs(o.probability - std::norm(coeff[k]) / norm));
      }
    }
    g.check(worst <= kTolerance, name + " branch probabilities follow the Born rule (worst " + fmt(worst) + ")");
  }
  return g.done();
}

GroupResult dense_coding_group() {
  Group g("dense-coding");
  for (HolderPair h : {HolderPair::first_two(), HolderPair::last_two()}) {
    const Codebook book = build_codebook(Family::C4, h);
    g.check(book.is_bijective(), "encodings on qubits " + h.str() + " give 16 distinct labels (got " +
                                     std::to_string(book.distinct_labels()) + ")");
  }
  for (HolderPair h : {HolderPair{2, 3}, HolderPair{1, 4}}) {
    const Codebook book = build_codebook(Family::C4, h);
    g.note("qubits " + h.str() + ": " + std::to_string(book.distinct_labels()) + " distinct labels");
  }
  Rng rng(7);
  std::vector<std::string> messages;
  for (int k = 0; k < 100; ++k) messages.push_back(index_to_bits(rng.next_u64() % 16, 4));
  DialogueConfig config;
  config.stop_on_error = false;
  const auto transcript = dialogue_run(messages, 11, config);
  double worst = 0;
  for (const auto& t : transcript.turns) worst = std::max(worst, std::abs(t.channel_fidelity - 1.0));
  g.check(transcript.decode_errors() == 0,
          "100-message dialogue on qubits 1,2 / 3,4 decodes every message (" +
              std::to_string(transcript.decode_errors()) + " errors)");
  g.check(worst <= kTolerance, "channel restored after every turn (worst " + fmt(worst) + ")");
  return g.done();
}

GroupResult errors_group() {
  Group g("errors");
  const SyndromeTable table = build_syndrome_table(Family::C4);
  g.check(table.cases().size() == 13, "13 injection cases, all with a deterministic label");
  bool sound = true;
  for (const auto& [error, label] : table.cases()) {
    const auto candidates = table.diagnose(label);
    sound = sound && std::find(candidates.begin(), candidates.end(), error) != candidates.end();
  }
  g.check(sound, "diagnosis always contains the injected error");
  g.note(std::to_string(table.distinct_labels()) + " distinct labels reached; " +
         std::to_string(kClaimedErrorStates) + " claimed; " + std::to_string(table.collisions().size()) +
         " labels shared by several errors");
  return g.done();
}

}  // namespace

std::vector<GroupResult> run_verification(const VerifyOptions& options) {
  std::vector<GroupResult> groups;
  groups.push_back(tables_group(options));
  groups.push_back(kernel_group());
  groups.push_back(generation_group());
  groups.push_back(ndd_group());
  groups.push_back(dense_coding_group());
  groups.push_back(errors_group());
  return groups;
}

}  // namespace clusterndd
