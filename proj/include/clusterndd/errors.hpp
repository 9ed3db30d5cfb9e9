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

#include <stdexcept>
#include <string>

namespace clusterndd {

// Bad indices, malformed bitstrings, mismatched dimensions.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Register larger than kMaxQubits.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A value failed a numerical check (e.g. a gate matrix that is not unitary).
class ValidationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Library data disagrees with itself: a generator output that matches no
// table row, a nondeterministic branch where one outcome was required.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A request that cannot be served under the chosen configuration, such as
// discriminating against a table that is not an orthonormal basis.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Decoded message differs from the one sent.
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace clusterndd
