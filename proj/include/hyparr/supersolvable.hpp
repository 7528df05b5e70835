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
#include <vector>

#include "hyparr/chamber_order.hpp"

namespace hyparr {

// flats[i] has codim i + 1; each contains the next as a subspace, so
// the last one is the modular line. Length rank - 1.
struct ModularFlag {
  std::vector<Flat> flats;
};

// X + Y is a flat for every flat Y. Full scan over `flats` (the lattice of a).
// Throws kNotAFlat.
bool is_modular(const Arrangement& a, const std::vector<Flat>& flats, const Flat& x);
bool is_modular(const Arrangement& a, const Flat& x);

// Recursion through modular lines and their localizations; rank <= 2 is
// always supersolvable. Returns a witness flag.
std::optional<ModularFlag> is_supersolvable(const Arrangement& a);

// Exhaustive search for a flag of modular flats (no recursion through
// localizations), for cross-checking.
std::optional<ModularFlag> modular_flag_by_search(const Arrangement& a);

// A modular flag each of whose members c0 is incident to.
std::optional<ModularFlag> incident_modular_flag(const PointedArrangement& pa);

// Supersolvable arrangement of the same rank whose first |a| hyperplanes are
// those of a. Line choice: largest localization, ties by canonical key.
Arrangement supersolvable_extension(const Arrangement& a);

// Fiber over (c0)_l of the localization map, read as the crossing order of
// A \ A_l. Throws kNotAFlat, kNotModular (not a modular line), kNotIncident,
// kNotAChain.
std::vector<std::size_t> fiber_order(const PointedArrangement& pa, const Flat& l);

// For i < j < k in the fiber order: if c0 is incident to l + (H_i ∩ H_k)
// then H_j contains H_i ∩ H_k.
bool check_fiber_betweenness(const PointedArrangement& pa, const Flat& l);

}  // namespace hyparr
