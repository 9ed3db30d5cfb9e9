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

#include <string>

#include "clusterndd/cluster.hpp"
#include "clusterndd/qstate.hpp"

namespace clusterndd {

// Signed-ket form in index order with the common magnitude factored out,
// first term unsigned: "1/2(|0000⟩+|0011⟩+|1100⟩−|1111⟩)". States whose
// amplitudes are not all ±c fall back to explicit complex coefficients.
std::string ket_form(const StateVector& state);

// A row exactly as printed, e.g. "1/2(|0000⟩+|0011⟩+|1100⟩−|1111⟩)".
std::string ket_form(const TableRow& row);

}  // namespace clusterndd
