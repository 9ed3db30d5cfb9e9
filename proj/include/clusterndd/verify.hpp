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
#include <optional>
#include <string>
#include <vector>

namespace clusterndd {

struct VerifyOptions {
  // Read table_c4.txt / table_c5.txt from here instead of the compiled-in
  // copies.
  std::optional<std::filesystem::path> tables_dir;
};

struct GroupResult {
  std::string name;
  bool pass = true;
  std::vector<std::string> details;
};

// Runs the library's invariant groups: tables, kernel, generation, ndd,
// dense-coding, dialogue, errors. Deterministic.
std::vector<GroupResult> run_verification(const VerifyOptions& options = {});

}  // namespace clusterndd
