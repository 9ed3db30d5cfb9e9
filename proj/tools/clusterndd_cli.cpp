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

// clusterndd: generate cluster states, discriminate them non-destructively,
// audit the published tables, and run the dense-coding and error-detection
// protocols.
//
// Exit codes: 0 success, 1 verification failure or defects found, 2 usage
// error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clusterndd/cluster.hpp"
#include "clusterndd/errors.hpp"
#include "clusterndd/gates.hpp"
#include "clusterndd/ndd.hpp"
#include "clusterndd/protocols.hpp"
#include "clusterndd/render.hpp"
#include "clusterndd/serialize.hpp"
#include "clusterndd/verify.hpp"

namespace {

using namespace clusterndd;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fixed12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("NDD_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("NDD_SEED is not an integer: ") + env);
    }
  }
  return 0;
}

bool structured(const std::string& format) { return format == "structured"; }

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) out.push_back(item);
  return out;
}

// ---- gen ----

struct GenArgs {
  std::string family;
  std::string input;
  std::string out;
  std::string format = "text";
};

int cmd_gen(const GenArgs& args) {
  const Family family = parse_family(args.family);
  const StateVector state = generate(family, args.input);
  if (!args.out.empty()) save_state(args.out, state);
  std::cout << (structured(args.format) ? write_state_document(state) : ket_form(state) + "\n");
  return kExitOk;
}

// ---- ndd ----

struct NddArgs {
  std::string family;
  std::string state;
  std::optional<std::uint64_t> seed;
  bool enumerate = false;
  std::string table = "repaired";
  std::string format = "text";
};

TableMode parse_mode(const std::string& name) {
  if (name == "repaired") return TableMode::Repaired;
  if (name == "verbatim") return TableMode::Verbatim;
  throw UsageError("--table must be repaired or verbatim");
}

int cmd_ndd(const NddArgs& args) {
  const Family family = parse_family(args.family);
  const TableMode mode = parse_mode(args.table);
  const StateVector input = args.state.rfind("row:", 0) == 0
                                ? table_state(family, args.state.substr(4), mode)
                                : load_state(args.state);
  if (input.n_qubits() != family_info(family).n_data) {
    throw UsageError("state has " + std::to_string(input.n_qubits()) + " qubits; " +
                     std::string(family_info(family).name) + " needs " +
                     std::to_string(family_info(family).n_data));
  }
  std::vector<NddOutcome> outcomes;
  if (args.enumerate) {
    outcomes = branch_ndd(input, family, mode);
  } else {
    outcomes.push_back(run_ndd(input, family, resolve_seed(args.seed), mode));
  }
  if (structured(args.format)) {
    std::cout << outcomes_to_json(outcomes, family, mode) << "\n";
    return kExitOk;
  }
  for (const auto& o : outcomes) {
    const double fid = fidelity_up_to_phase(o.post_state, table_state(family, o.label, mode));
    std::cout << "label " << o.label << "  p = " << fixed12(o.probability)
              << "  fidelity = " << fixed12(fid) << "\n";
  }
  return kExitOk;
}

// ---- audit ----

int cmd_audit(const std::string& family_name, bool repaired_mode, const std::string& format) {
  const Family family = parse_family(family_name);
  const AuditReport report =
      audit_orthogonality(repaired_mode ? repaired_table(family) : verbatim_table(family));
  if (structured(format)) {
    std::cout << audit_to_json(report) << "\n";
  } else {
    std::cout << family_info(family).name << " (" << (repaired_mode ? "repaired" : "verbatim")
              << "): " << report.non_orthogonal_pairs.size() << " defects\n";
    for (const auto& p : report.non_orthogonal_pairs) {
      std::cout << "  <" << p.label_a << "|" << p.label_b << "> = " << p.inner_product.real();
      if (p.inner_product.imag() != 0.0) std::cout << " + " << p.inner_product.imag() << "i";
      std::cout << "\n";
    }
    for (const auto& r : report.suggested_repairs) {
      std::cout << "  repair: row " << r.label << " ket |" << r.ket << "> sign -> "
                << (r.new_sign > 0 ? "+" : "-") << "\n";
    }
    for (const auto& b : report.unrepaired_blocks) {
      std::cout << "  no unique single-sign repair for the block of row " << b << "\n";
    }
  }
  return report.clean() ? kExitOk : kExitFailure;
}

// ---- dialogue ----

struct DialogueArgs {
  std::string messages;
  std::optional<std::uint64_t> seed;
  std::string alice = "1,2";
  std::string bob = "3,4";
  std::string format = "text";
};

int cmd_dialogue(const DialogueArgs& args) {
  const std::vector<std::string> messages = split_commas(args.messages);
  if (messages.empty()) throw UsageError("--messages is empty");
  for (const auto& m : messages) {
    if (m.size() != 4 || !is_bitstring(m)) throw UsageError("message '" + m + "' is not 4 bits");
  }
  DialogueConfig config;
  config.alice = parse_holder(args.alice);
  config.bob = parse_holder(args.bob);
  config.stop_on_error = false;
  const DialogueTranscript transcript = dialogue_run(messages, resolve_seed(args.seed), config);
  if (structured(args.format)) {
    std::cout << transcript_to_json(transcript) << "\n";
  } else {
    for (std::size_t t = 0; t < transcript.turns.size(); ++t) {
      const auto& turn = transcript.turns[t];
      std::cout << "turn " << t + 1 << "  " << turn.speaker << "  sent " << turn.sent << "  label "
                << turn.label << "  decoded ";
      if (turn.ok) {
        std::cout << turn.decoded;
      } else {
        std::cout << "{";
        for (std::size_t k = 0; k < turn.candidates.size(); ++k) {
          std::cout << (k ? "," : "") << turn.candidates[k];
        }
        std::cout << "} MISMATCH";
      }
      std::cout << "  fidelity = " << fixed12(turn.channel_fidelity) << "\n";
    }
    std::cout << transcript.decode_errors() << " decode errors\n";
  }
  return transcript.decode_errors() == 0 ? kExitOk : kExitFailure;
}

// ---- errors ----

int cmd_errors(const std::string& family_name, const std::string& format) {
  const SyndromeTable table = build_syndrome_table(parse_family(family_name));
  if (structured(format)) {
    std::cout << syndrome_to_json(table) << "\n";
    return kExitOk;
  }
  for (const auto& [error, label] : table.cases()) {
    std::string candidates;
    for (const auto& c : table.diagnose(label)) candidates += (candidates.empty() ? "" : " ") + c.str();
    std::printf("%-16s label %s  p = 1  candidates: %s\n", error.str().c_str(), label.c_str(),
                candidates.c_str());
  }
  std::cout << table.distinct_labels() << " distinct labels from " << table.cases().size()
            << " injection cases (" << kClaimedErrorStates << " orthogonal states claimed)\n";
  for (const auto& label : table.collisions()) {
    std::cout << "collision on " << label << ":";
    for (const auto& e : table.diagnose(label)) std::cout << " " << e.str();
    std::cout << "\n";
  }
  return kExitOk;
}

// ---- verify ----

int cmd_verify(const std::string& tables_dir) {
  VerifyOptions options;
  if (!tables_dir.empty()) options.tables_dir = tables_dir;
  bool all = true;
  for (const auto& group : run_verification(options)) {
    std::cout << (group.pass ? "PASS " : "FAIL ") << group.name << "\n";
    for (const auto& line : group.details) std::cout << "    " << line << "\n";
    all = all && group.pass;
  }
  return all ? kExitOk : kExitFailure;
}

// ---- run ----

int cmd_run(const std::string& circuit_path, const std::string& input, const std::string& format) {
  std::ifstream in(circuit_path);
  if (!in) throw UsageError("cannot read " + circuit_path);
  std::stringstream text;
  text << in.rdbuf();
  if (!is_bitstring(input)) throw UsageError("--input must be a bitstring");
  const Circuit circuit = parse_circuit(text.str(), static_cast<int>(input.size()));
  const StateVector out = run_circuit(circuit, basis_state(circuit.n_qubits(), input));
  std::cout << (structured(format) ? write_state_document(out) : ket_form(out) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster-state generation and non-destructive discrimination"};
  app.require_subcommand(1);
  const std::vector<std::string> kFormats = {"text", "structured"};
  const std::vector<std::string> kFamilies = {"c4", "c5", "C4", "C5"};

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a cluster state from a computational input");
  gen_cmd->add_option("--family", gen.family)->required()->check(CLI::IsMember(kFamilies));
  gen_cmd->add_option("--input", gen.input, "Input bits, one per data qubit")->required();
  gen_cmd->add_option("--out", gen.out, "Also write the state document here");
  gen_cmd->add_option("--format", gen.format)->check(CLI::IsMember(kFormats));

  NddArgs ndd;
  auto* ndd_cmd = app.add_subcommand("ndd", "Discriminate a state against the cluster table");
  ndd_cmd->add_option("--family", ndd.family)->required()->check(CLI::IsMember(kFamilies));
  ndd_cmd->add_option("--state", ndd.state, "State document path or row:LABEL")->required();
  auto* seed_opt = ndd_cmd->add_option("--seed", ndd.seed, "Measurement seed (default $NDD_SEED or 0)");
  ndd_cmd->add_flag("--enumerate", ndd.enumerate, "List every outcome instead of sampling")->excludes(seed_opt);
  ndd_cmd->add_option("--table", ndd.table)->check(CLI::IsMember({"repaired", "verbatim"}));
  ndd_cmd->add_option("--format", ndd.format)->check(CLI::IsMember(kFormats));

  std::string audit_family;
  std::string audit_format = "text";
  bool audit_verbatim = false;
  bool audit_repaired = false;
  auto* audit_cmd = app.add_subcommand("audit", "Check the table rows for pairwise orthogonality");
  audit_cmd->add_option("--family", audit_family)->required()->check(CLI::IsMember(kFamilies));
  auto* verbatim_flag = audit_cmd->add_flag("--verbatim", audit_verbatim, "Rows as printed (default)");
  audit_cmd->add_flag("--repaired", audit_repaired, "Rows after the suggested repairs")->excludes(verbatim_flag);
  audit_cmd->add_option("--format", audit_format)->check(CLI::IsMember(kFormats));

  DialogueArgs dialogue;
  auto* dialogue_cmd = app.add_subcommand("dialogue", "Dense-coding dialogue over a reusable |C4>");
  dialogue_cmd->add_option("--messages", dialogue.messages, "Comma-separated 4-bit messages")->required();
  dialogue_cmd->add_option("--seed", dialogue.seed, "Measurement seed (default $NDD_SEED or 0)");
  dialogue_cmd->add_option("--alice", dialogue.alice, "Alice's two qubits (default 1,2)");
  dialogue_cmd->add_option("--bob", dialogue.bob, "Bob's two qubits (default 3,4)");
  dialogue_cmd->add_option("--format", dialogue.format)->check(CLI::IsMember(kFormats));

  std::string errors_family = "c4";
  std::string errors_format = "text";
  auto* errors_cmd = app.add_subcommand("errors", "Single-qubit error syndromes on the canonical state");
  errors_cmd->add_option("--family", errors_family)->check(CLI::IsMember(kFamilies));
  errors_cmd->add_option("--format", errors_format)->check(CLI::IsMember(kFormats));

  std::string tables_dir;
  auto* verify_cmd = app.add_subcommand("verify", "Run every invariant group");
  verify_cmd->add_option("--tables-dir", tables_dir, "Directory with table_c4.txt and table_c5.txt");

  std::string circuit_path;
  std::string run_input;
  std::string run_format = "text";
  auto* run_cmd = app.add_subcommand("run", "Run a circuit file on a basis state");
  run_cmd->add_option("--circuit", circuit_path)->required();
  run_cmd->add_option("--input", run_input)->required();
  run_cmd->add_option("--format", run_format)->check(CLI::IsMember(kFormats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*ndd_cmd) return cmd_ndd(ndd);
    if (*audit_cmd) return cmd_audit(audit_family, audit_repaired, audit_format);
    if (*dialogue_cmd) return cmd_dialogue(dialogue);
    if (*errors_cmd) return cmd_errors(errors_family, errors_format);
    if (*verify_cmd) return cmd_verify(tables_dir);
    if (*run_cmd) return cmd_run(circuit_path, run_input, run_format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
