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

#include <optional>
#include <string>
#include <vector>

#include "hyparr/arrangement.hpp"
#include "hyparr/chamber_order.hpp"
#include "hyparr/sign_vector.hpp"

namespace hyparr {

struct ArrangementFile {
  Arrangement arrangement;
  std::optional<SignVector> fundamental_chamber;
};

// {"dim": n, "hyperplanes": [["p/q", ...], ...], "fundamental_chamber": "+-..",
//  "labels": [...]}. Syntax errors carry line and column; everything
// else names the offending field. Throws Error(kParse) or the arrangement
// construction errors.
ArrangementFile parse_arrangement_json(const std::string& text);
ArrangementFile read_arrangement_file(const std::string& path);

std::string arrangement_to_json(const Arrangement& a, const std::optional<SignVector>& c0 = std::nullopt);

// Hasse diagram of P(A, c0): nodes are sign words, edges point upward.
std::string poset_dot(const PointedArrangement& pa, const ChamberPoset& poset);
// {"chambers": [{"sign", "separation": [labels], "rank"}], "covers": [[i, j]],
//  "bottom", "top", "lattice"}
std::string poset_json(const PointedArrangement& pa, const ChamberPoset& poset);

}  // namespace hyparr
