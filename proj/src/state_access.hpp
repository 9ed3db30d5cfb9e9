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

#include <utility>
#include <vector>

#include "clusterndd/qstate.hpp"

namespace clusterndd {

// Builds states from amplitudes the library has produced itself (unitary
// images, renormalized projections) without re-running the norm check.
struct StateAccess {
  static StateVector make(int n_qubits, std::vector<Amplitude> amps) {
    return StateVector(StateVector::Unchecked{}, n_qubits, std::move(amps));
  }
};

}  // namespace clusterndd
