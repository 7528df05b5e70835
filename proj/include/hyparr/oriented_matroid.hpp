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
#include <unordered_set>
#include <vector>

#include "hyparr/arrangement.hpp"
#include "hyparr/sign_vector.hpp"

namespace hyparr {

// A realizable sign word together with a point realizing it.
struct Covector {
  SignVector sign;
  Vector witness;

  friend bool operator==(const Covector& a, const Covector& b) { return a.sign == b.sign; }
  friend auto operator<=>(const Covector& a, const Covector& b) { return a.sign <=> b.sign; }
};

// Covector with empty zero set.
struct Chamber {
  SignVector sign;
  Vector witness;

  friend bool operator==(const Chamber& a, const Chamber& b) { return a.sign == b.sign; }
  friend auto operator<=>(const Chamber& a, const Chamber& b) { return a.sign <=> b.sign; }
};

// Minimal linear dependence among normals. Canonical sign: first nonzero +.
struct Circuit {
  SignVector sign;
  Vector coeffs;  // full length, zero off the support, sum coeffs[h] * normal(h) == 0

  HyperplaneSet support() const { return sign.support(); }
};

// The constraints {<normal_h, x> sign x(h)} for a word x.
std::vector<SignConstraint> sign_constraints(const Arrangement& a, const SignVector& x);

// Direct feasibility test of one word; returns the covector with witness.
std::optional<Covector> realize(const Arrangement& a, const SignVector& x);

// All chambers in canonical (sign word) order: a generic point of the moment
// curve seeds the search, then wall-crossings are explored breadth first.
std::vector<Chamber> enumerate_chambers(const Arrangement& a);

// All circuits up to negation, sorted by support.
std::vector<Circuit> enumerate_circuits(const Arrangement& a);

// Set of full sign words, for constant-time chamber membership.
class ChamberTable {
 public:
  ChamberTable() = default;
  ChamberTable(std::size_t n, const std::vector<Chamber>& chambers);

  std::size_t size() const { return plus_masks_.size(); }
  bool contains(const SignVector& word) const {
    return word.size() == n_ && word.is_full() && plus_masks_.count(word.positive().bits()) != 0;
  }

 private:
  std::size_t n_ = 0;
  std::unordered_set<std::uint64_t> plus_masks_;
};

// Mandel's criterion: x is a covector iff x o c is a chamber for every chamber c.
bool is_covector(const ChamberTable& table, const std::vector<Chamber>& chambers, const SignVector& x);

// Covectors whose zero set is exactly the hyperplanes containing x.
std::vector<Covector> covectors_with_zero_set(const Arrangement& a, const std::vector<Chamber>& chambers,
                                              const Flat& x);

// Every covector, canonical order.
std::vector<Covector> enumerate_covectors(const Arrangement& a, const std::vector<Chamber>& chambers,
                                          const std::vector<Flat>& flats);

}  // namespace hyparr
