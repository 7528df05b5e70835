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
#include <optional>
#include <string>
#include <vector>

#include "hyparr/chamber_order.hpp"

namespace hyparr {

// Every predicate below is relative to pa.c0(). Circuit forms work in the
// reorientation where c0 is all +.

// The chamber c with S(c0, c) = I, found by a feasibility solve.
std::optional<Chamber> is_separable(const PointedArrangement& pa, HyperplaneSet i);
// No circuit v with v+ ⊆ I and v- ⊆ A - I.
bool is_separable_by_circuits(const PointedArrangement& pa, HyperplaneSet i);

// No circuit v with v+ ⊆ I, v- ⊆ A - I and |v-| = 1.
bool is_convex(const PointedArrangement& pa, HyperplaneSet i);
// For each H outside I some chamber c has H in S(c) and S(c) disjoint from I.
bool is_convex_by_chambers(const PointedArrangement& pa, HyperplaneSet i);

// Three-element circuit form.
bool is_2closed(const PointedArrangement& pa, HyperplaneSet i);
// I ∩ A_X convex in A_X for every codim-2 flat X, using chambers of A_X.
bool is_2closed_by_localization(const PointedArrangement& pa, HyperplaneSet i);

bool is_biclosed(const PointedArrangement& pa, HyperplaneSet i);
bool is_biconvex(const PointedArrangement& pa, HyperplaneSet i);

struct ForcingStep {
  SignVector circuit;  // reoriented; its single - entry is `forced`
  std::size_t forced = 0;
};

struct ClosureReport {
  HyperplaneSet input;
  HyperplaneSet closure;
  std::vector<ForcingStep> forcing_chain;
};

enum class ClosureKind { kConvex, kTwo };

// Least fixed point of "add the - element of a circuit whose + part is
// already in". Circuits are scanned in `order` (indices into
// pa.reoriented_circuits(), default canonical) until nothing changes.
ClosureReport closure(const PointedArrangement& pa, HyperplaneSet i, ClosureKind kind,
                      const std::vector<std::size_t>* order = nullptr);
inline ClosureReport closure_2(const PointedArrangement& pa, HyperplaneSet i) {
  return closure(pa, i, ClosureKind::kTwo);
}
inline ClosureReport closure_convex(const PointedArrangement& pa, HyperplaneSet i) {
  return closure(pa, i, ClosureKind::kConvex);
}

// Replays a forcing chain from its input; false if some step is not a
// legitimate forcing or the chain does not end at the stated closure.
bool verify_closure_report(const PointedArrangement& pa, const ClosureReport& report, ClosureKind kind);

std::string closure_report_json(const PointedArrangement& pa, const ClosureReport& report);

// Three-element circuits as bitmasks (reoriented), oriented so that |plus| = 2.
// I is 2-closed iff no entry has plus ⊆ I and minus outside I.
struct TriangleTable {
  std::uint64_t all = 0;
  std::vector<std::uint64_t> plus;
  std::vector<std::uint64_t> minus;
};
TriangleTable triangle_table(const PointedArrangement& pa);

inline bool two_closed_mask(const TriangleTable& t, std::uint64_t i) {
  for (std::size_t k = 0; k < t.plus.size(); ++k) {
    if ((t.plus[k] & ~i) == 0 && (t.minus[k] & i) == 0) return false;
  }
  return true;
}
inline bool biclosed_mask(const TriangleTable& t, std::uint64_t i) {
  return two_closed_mask(t, i) && two_closed_mask(t, t.all & ~i);
}

// Every biclosed set in canonical order. Throws kBoundExceeded when 2^N
// exceeds `bound`.
std::vector<HyperplaneSet> enumerate_biclosed(const PointedArrangement& pa, std::uint64_t bound);

// Separation sets of all chambers in canonical set order.
std::vector<HyperplaneSet> separation_sets(const PointedArrangement& pa);

// I △ S(c0, c).
HyperplaneSet rotate_biclosed(const PointedArrangement& pa, HyperplaneSet i, const SignVector& c);

// The chamber separated from c0 by the 2-closure of S(c) ∪ S(d), if any.
std::optional<Chamber> join_via_2closure(const PointedArrangement& pa, const SignVector& c, const SignVector& d);

}  // namespace hyparr
