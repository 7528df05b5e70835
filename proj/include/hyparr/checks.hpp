// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyparr/chamber_order.hpp"
#include "json.hpp"

namespace hyparr {

enum class CheckStatus { kPass, kFail, kSkipped };
const char* status_name(CheckStatus s);

struct CheckReport {
  std::string check;
  std::string fixture;
  CheckStatus status = CheckStatus::kPass;
  std::string note;
  // On failure: {"check", "fixture", "arrangement", "c0", "witness"}; enough
  // to rebuild the input and rerun the check.
  nlohmann::json counterexample;
  double millis = 0;
};

struct CheckOptions {
  std::uint64_t bound = std::uint64_t{1} << 20;
  bool force = false;  // run even when the hypotheses do not hold
};

// Selector names in the order `--all` runs them. "thm-1.1" is accepted for
// "1.1" and so on.
const std::vector<std::string>& check_names();

// Throws kUnknownSelector, kBoundExceeded.
CheckReport run_check(const std::string& name, const PointedArrangement& pa, const std::string& fixture,
                      const CheckOptions& options = {});

std::vector<CheckReport> run_all_checks(const PointedArrangement& pa, const std::string& fixture,
                                        const CheckOptions& options = {});

// Timing is left out unless asked for, so reports are byte-stable.
nlohmann::json report_json(const CheckReport& r, bool with_timing = false);

// Rebuilds the arrangement from a failure payload (or a report carrying
// one), reruns the check with force, and returns the fresh report. The
// failure reproduces when the status is fail and the witness matches.
CheckReport replay(const nlohmann::json& payload, const CheckOptions& options = {});
bool replay_reproduces(const nlohmann::json& payload, const CheckOptions& options = {});

}  // namespace hyparr
