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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clusterndd/cluster.hpp"
#include "clusterndd/qstate.hpp"

namespace clusterndd {

enum class Pauli { I, X, Y, Z };

char pauli_char(Pauli p);

class PauliWord {
 public:
  PauliWord() = default;
  explicit PauliWord(std::vector<Pauli> letters) : letters_(std::move(letters)) {}
  // "XZ", "IY", ...; throws ArgumentError on other characters.
  static PauliWord parse(std::string_view text);

  const std::vector<Pauli>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  std::string str() const;

  bool operator==(const PauliWord&) const = default;

 private:
  std::vector<Pauli> letters_;
};

// letters[k] acts on qubits[k].
StateVector apply_pauli(const StateVector& state, const PauliWord& word,
                        std::span<const int> qubits);

// ---- dense coding ----

// The two channel qubits one party operates on.
struct HolderPair {
  int first;
  int second;

  static constexpr HolderPair first_two() { return {1, 2}; }
  static constexpr HolderPair last_two() { return {3, 4}; }

  std::array<int, 2> qubits() const { return {first, second}; }
  std::string str() const;
  bool operator==(const HolderPair&) const = default;
};

HolderPair parse_holder(std::string_view text);  // "1,2"

// Two bits per Pauli index, I=00 X=01 Y=10 Z=11, first qubit first.
PauliWord message_to_pauli(std::string_view message);
std::string pauli_to_message(const PauliWord& word);

struct CodebookEntry {
  std::string message;
  PauliWord word;
  std::string label;
};

class Codebook {
 public:
  Codebook(Family family, HolderPair holder, std::vector<CodebookEntry> entries);

  Family family() const { return family_; }
  HolderPair holder() const { return holder_; }
  const std::vector<CodebookEntry>& entries() const { return entries_; }

  const CodebookEntry& encode(std::string_view message) const;
  // All messages whose encoding produces `label`. More than one means the
  // holder's qubits cannot carry four bits.
  std::vector<std::string> decode(std::string_view label) const;

  std::size_t distinct_labels() const;
  bool is_bijective() const { return distinct_labels() == entries_.size(); }

 private:
  Family family_;
  HolderPair holder_;
  std::vector<CodebookEntry> entries_;  // ordered by message
  std::multimap<std::string, std::string> by_label_;
};

// Applies each of the 16 two-qubit Pauli words to canonical |C4> on the
// holder's qubits and records the NDD label. Throws ArgumentError for C5 and
// ContractViolation if any encoding gives a nondeterministic outcome.
Codebook build_codebook(Family family, HolderPair holder);

struct DialogueConfig {
  HolderPair alice = HolderPair::first_two();
  HolderPair bob = HolderPair::last_two();
  // Throw ProtocolError on the first bad decode instead of recording it.
  bool stop_on_error = true;
};

struct DialogueTurn {
  std::string speaker;  // "Alice" or "Bob"
  std::string sent;
  std::string label;
  std::vector<std::string> candidates;
  std::string decoded;  // empty unless exactly one candidate
  bool ok;
  double channel_fidelity;  // vs canonical |C4> after restoration
};

struct DialogueTranscript {
  std::vector<DialogueTurn> turns;

  std::size_t decode_errors() const;
};

// Alternating dense-coding turns over one shared |C4>, Alice first. The
// speaker applies the codebook Pauli on their pair, the listener runs NDD
// and decodes, then the speaker's Pauli is applied again to restore the
// channel.
DialogueTranscript dialogue_run(std::span<const std::string> messages, std::uint64_t seed,
                                const DialogueConfig& config = {});

// ---- error detection ----

enum class ErrorKind { None, BitFlip, PhaseFlip, Both };

std::string_view error_kind_name(ErrorKind kind);
ErrorKind parse_error_kind(std::string_view name);

// X, Z or Z*X on `qubit`. ErrorKind::None is rejected.
StateVector inject_error(const StateVector& state, int qubit, ErrorKind kind);

struct InjectedError {
  int qubit = 0;  // 0 for no error
  ErrorKind kind = ErrorKind::None;

  std::string str() const;
  bool operator==(const InjectedError&) const = default;
  auto operator<=>(const InjectedError&) const = default;
};

class SyndromeTable {
 public:
  SyndromeTable(Family family, std::vector<std::pair<InjectedError, std::string>> cases);

  Family family() const { return family_; }
  // Injection cases in enumeration order with their NDD label.
  const std::vector<std::pair<InjectedError, std::string>>& cases() const { return cases_; }
  const std::map<std::string, std::vector<InjectedError>>& entries() const { return entries_; }

  // Every injected error consistent with `label`; empty if unreachable.
  std::vector<InjectedError> diagnose(std::string_view label) const;

  std::size_t distinct_labels() const { return entries_.size(); }
  // Labels reached by more than one injection.
  std::vector<std::string> collisions() const;

 private:
  Family family_;
  std::vector<std::pair<InjectedError, std::string>> cases_;
  std::map<std::string, std::vector<InjectedError>> entries_;
};

// The orthogonal-state count claimed for single-qubit errors on |C4>.
inline constexpr std::size_t kClaimedErrorStates = 16;

// No error plus every (qubit, kind) on the canonical state.
SyndromeTable build_syndrome_table(Family family);

}  // namespace clusterndd
