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

#include "clusterndd/protocols.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "clusterndd/errors.hpp"
#include "clusterndd/gates.hpp"
#include "clusterndd/ndd.hpp"

namespace clusterndd {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

PauliWord PauliWord::parse(std::string_view text) {
  std::vector<Pauli> letters;
  for (char c : text) {
    switch (c) {
      case 'I': case 'i': letters.push_back(Pauli::I); break;
      case 'X': case 'x': letters.push_back(Pauli::X); break;
      case 'Y': case 'y': letters.push_back(Pauli::Y); break;
      case 'Z': case 'z': letters.push_back(Pauli::Z); break;
      default:
        throw ArgumentError("'" + std::string(text) + "' is not a Pauli word");
    }
  }
  return PauliWord(std::move(letters));
}

std::string PauliWord::str() const {
  std::string s;
  for (Pauli p : letters_) s += pauli_char(p);
  return s;
}

StateVector apply_pauli(const StateVector& state, const PauliWord& word,
                        std::span<const int> qubits) {
  if (word.size() != qubits.size()) {
    throw ArgumentError("Pauli word " + word.str() + " has " + std::to_string(word.size()) +
                        " letters for " + std::to_string(qubits.size()) + " qubits");
  }
  std::set<int> seen;
  for (int q : qubits) {
    if (q < 1 || q > state.n_qubits()) {
      throw ArgumentError("qubit " + std::to_string(q) + " out of range");
    }
    if (!seen.insert(q).second) throw ArgumentError("qubit " + std::to_string(q) + " repeated");
  }
  StateVector out = state;
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    switch (word.letters()[k]) {
      case Pauli::I: break;
      case Pauli::X: out = apply_gate(out, named_gate(GateName::X, qubits[k])); break;
      case Pauli::Y: out = apply_gate(out, named_gate(GateName::Y, qubits[k])); break;
      case Pauli::Z: out = apply_gate(out, named_gate(GateName::Z, qubits[k])); break;
    }
  }
  return out;
}

// ---- dense coding ----

std::string HolderPair::str() const {
  return std::to_string(first) + "," + std::to_string(second);
}

HolderPair parse_holder(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw ArgumentError("holder '" + std::string(text) + "' must look like 1,2");
  }
  auto to_int = [&](std::string_view s) {
    if (s.size() != 1 || s[0] < '1' || s[0] > '4') {
      throw ArgumentError("holder '" + std::string(text) + "' must name two qubits in 1..4");
    }
    return s[0] - '0';
  };
  HolderPair h{to_int(text.substr(0, comma)), to_int(text.substr(comma + 1))};
  if (h.first == h.second) throw ArgumentError("holder names the same qubit twice");
  return h;
}

PauliWord message_to_pauli(std::string_view message) {
  if (message.size() != 4 || !is_bitstring(message)) {
    throw ArgumentError("message '" + std::string(message) + "' is not 4 bits");
  }
  static constexpr Pauli kByIndex[] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
  const auto index = [&](std::size_t k) { return ((message[k] - '0') << 1) | (message[k + 1] - '0'); };
  return PauliWord({kByIndex[index(0)], kByIndex[index(2)]});
}

std::string pauli_to_message(const PauliWord& word) {
  if (word.size() != 2) throw ArgumentError("dense-coding words have two letters");
  std::string message;
  for (Pauli p : word.letters()) {
    const int i = static_cast<int>(p);
    message += static_cast<char>('0' + (i >> 1));
    message += static_cast<char>('0' + (i & 1));
  }
  return message;
}

Codebook::Codebook(Family family, HolderPair holder, std::vector<CodebookEntry> entries)
    : family_(family), holder_(holder), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const CodebookEntry& a, const CodebookEntry& b) { return a.message < b.message; });
  for (const auto& e : entries_) by_label_.emplace(e.label, e.message);
}

const CodebookEntry& Codebook::encode(std::string_view message) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), message,
      [](const CodebookEntry& e, std::string_view m) { return e.message < m; });
  if (it == entries_.end() || it->message != message) {
    throw ArgumentError("message '" + std::string(message) + "' not in codebook");
  }
  return *it;
}

std::vector<std::string> Codebook::decode(std::string_view label) const {
  std::vector<std::string> out;
  auto [lo, hi] = by_label_.equal_range(std::string(label));
  for (auto it = lo; it != hi; ++it) out.push_back(it->second);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Codebook::distinct_labels() const {
  std::set<std::string> labels;
  for (const auto& e : entries_) labels.insert(e.label);
  return labels.size();
}

namespace {

void check_holder(HolderPair h, int n_qubits) {
  for (int q : h.qubits()) {
    if (q < 1 || q > n_qubits) throw ArgumentError("holder qubit " + std::to_string(q) + " out of range");
  }
  if (h.first == h.second) throw ArgumentError("holder names the same qubit twice");
}

}  // namespace

Codebook build_codebook(Family family, HolderPair holder) {
  if (family != Family::C4) throw ArgumentError("dense coding is defined for C4 only");
  check_holder(holder, 4);
  const StateVector channel = canonical_state(family);
  const auto qubits = holder.qubits();
  std::vector<CodebookEntry> entries;
  for (const auto& message : all_bitstrings(4)) {
    PauliWord word = message_to_pauli(message);
    const auto outcomes = branch_ndd(apply_pauli(channel, word, qubits), family);
    if (outcomes.size() != 1) {
      throw ContractViolation("encoding " + word.str() + " on qubits " + holder.str() +
                              " gives " + std::to_string(outcomes.size()) + " NDD outcomes");
    }
    entries.push_back({message, std::move(word), outcomes.front().label});
  }
  return Codebook(family, holder, std::move(entries));
}

std::size_t DialogueTranscript::decode_errors() const {
  return static_cast<std::size_t>(
      std::count_if(turns.begin(), turns.end(), [](const DialogueTurn& t) { return !t.ok; }));
}

DialogueTranscript dialogue_run(std::span<const std::string> messages, std::uint64_t seed,
                                const DialogueConfig& config) {
  for (const auto& m : messages) message_to_pauli(m);
  const auto a = config.alice.qubits();
  const auto b = config.bob.qubits();
  for (int q : a) {
    if (std::find(b.begin(), b.end(), q) != b.end()) {
      throw ArgumentError("Alice and Bob both hold qubit " + std::to_string(q));
    }
  }
  const Codebook alice_book = build_codebook(Family::C4, config.alice);
  const Codebook bob_book = build_codebook(Family::C4, config.bob);

  const StateVector canonical = canonical_state(Family::C4);
  StateVector channel = canonical;
  Rng seeds(seed);
  DialogueTranscript transcript;
  for (std::size_t t = 0; t < messages.size(); ++t) {
    const bool alice_speaks = t % 2 == 0;
    const Codebook& book = alice_speaks ? alice_book : bob_book;
    const auto qubits = book.holder().qubits();
    const CodebookEntry& entry = book.encode(messages[t]);

    channel = apply_pauli(channel, entry.word, qubits);
    NddOutcome outcome = run_ndd(channel, Family::C4, seeds.next_u64());
    channel = apply_pauli(outcome.post_state, entry.word, qubits);

    DialogueTurn turn;
    turn.speaker = alice_speaks ? "Alice" : "Bob";
    turn.sent = messages[t];
    turn.label = outcome.label;
    turn.candidates = book.decode(outcome.label);
    if (turn.candidates.size() == 1) turn.decoded = turn.candidates.front();
    turn.ok = turn.decoded == turn.sent;
    turn.channel_fidelity = fidelity_up_to_phase(channel, canonical);
    transcript.turns.push_back(turn);

    if (!turn.ok && config.stop_on_error) {
      std::string why = "turn " + std::to_string(t + 1) + ": sent " + turn.sent + ", label " +
                        turn.label + " decodes to {";
      for (std::size_t k = 0; k < turn.candidates.size(); ++k) {
        why += (k ? "," : "") + turn.candidates[k];
      }
      throw ProtocolError(why + "}");
    }
  }
  return transcript;
}

// ---- error detection ----

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::None: return "none";
    case ErrorKind::BitFlip: return "bit-flip";
    case ErrorKind::PhaseFlip: return "phase-flip";
    case ErrorKind::Both: return "both";
  }
  return "?";
}

ErrorKind parse_error_kind(std::string_view name) {
  for (ErrorKind k : {ErrorKind::BitFlip, ErrorKind::PhaseFlip, ErrorKind::Both}) {
    if (name == error_kind_name(k)) return k;
  }
  throw ArgumentError("unknown error kind '" + std::string(name) + "'");
}

StateVector inject_error(const StateVector& state, int qubit, ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BitFlip:
      return apply_gate(state, named_gate(GateName::X, qubit));
    case ErrorKind::PhaseFlip:
      return apply_gate(state, named_gate(GateName::Z, qubit));
    case ErrorKind::Both:
      return apply_gate(apply_gate(state, named_gate(GateName::X, qubit)),
                        named_gate(GateName::Z, qubit));
    case ErrorKind::None:
      break;
  }
  throw ArgumentError("inject_error needs bit-flip, phase-flip or both");
}

std::string InjectedError::str() const {
  if (kind == ErrorKind::None) return "none";
  return "q" + std::to_string(qubit) + ":" + std::string(error_kind_name(kind));
}

SyndromeTable::SyndromeTable(Family family, std::vector<std::pair<InjectedError, std::string>> cases)
    : family_(family), cases_(std::move(cases)) {
  for (const auto& [error, label] : cases_) entries_[label].push_back(error);
}

std::vector<InjectedError> SyndromeTable::diagnose(std::string_view label) const {
  auto it = entries_.find(std::string(label));
  return it == entries_.end() ? std::vector<InjectedError>{} : it->second;
}

std::vector<std::string> SyndromeTable::collisions() const {
  std::vector<std::string> out;
  for (const auto& [label, errors] : entries_) {
    if (errors.size() > 1) out.push_back(label);
  }
  return out;
}

SyndromeTable build_syndrome_table(Family family) {
  const StateVector canonical = canonical_state(family);
  std::vector<std::pair<InjectedError, std::string>> cases;
  auto record = [&](InjectedError error, const StateVector& state) {
    const auto outcomes = branch_ndd(state, family);
    if (outcomes.size() != 1) {
      throw ContractViolation("error " + error.str() + " gives a nondeterministic NDD outcome");
    }
    cases.emplace_back(error, outcomes.front().label);
  };
  record({}, canonical);
  for (int q = 1; q <= family_info(family).n_data; ++q) {
    for (ErrorKind kind : {ErrorKind::BitFlip, ErrorKind::PhaseFlip, ErrorKind::Both}) {
      record({q, kind}, inject_error(canonical, q, kind));
    }
  }
  return SyndromeTable(family, std::move(cases));
}

}  // namespace clusterndd
