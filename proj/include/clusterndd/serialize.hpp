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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "clusterndd/cluster.hpp"
#include "clusterndd/ndd.hpp"
#include "clusterndd/protocols.hpp"
#include "clusterndd/qstate.hpp"

namespace clusterndd {

// State document:
//
//   {
//     "n_qubits": 2,
//     "amps": [
//       [7.0710678118654757e-01, 0.0000000000000000e+00],
//       ...
//     ]
//   }
//
// Amplitudes are written in index order with 17 significant digits.
std::string write_state_document(const StateVector& state);
// Throws ArgumentError on malformed input. The vector must already be
// normalized.
StateVector read_state_document(std::string_view text);

StateVector load_state(const std::filesystem::path& path);
void save_state(const std::filesystem::path& path, const StateVector& state);

// Structured reports, same JSON family as the state document.
std::string audit_to_json(const AuditReport& report);
std::string outcomes_to_json(const std::vector<NddOutcome>& outcomes, Family family,
                             TableMode mode);
std::string transcript_to_json(const DialogueTranscript& transcript);
std::string syndrome_to_json(const SyndromeTable& table);

}  // namespace clusterndd
