// Copyright 2026 The ffwiener Authors
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
#include <vector>

#include <nlohmann/json.hpp>

#include "ffw/montecarlo.hpp"

namespace ffw::cli {

enum class CheckStatus {
  kPass,
  kFail,
  kErratum,  ///< a printed value disagrees with the formula; reported, not a failure
};

std::string to_string(CheckStatus status);

struct Check {
  std::string section;
  std::string name;
  std::string tolerance;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
};

struct VerifyOptions {
  WienerMCConfig mc;
  /// Treat the printed F4 closed form as authoritative, so its mismatch fails.
  bool strict_table1_f4 = false;
};

struct VerifyReport {
  std::vector<Check> checks;

  bool passed() const;
  std::string to_text() const;
  nlohmann::json to_json() const;
};

VerifyReport run_verification(const VerifyOptions& options);

}  // namespace ffw::cli
