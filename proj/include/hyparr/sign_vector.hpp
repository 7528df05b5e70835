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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "hyparr/hyperplane_set.hpp"
#include "hyparr/sign.hpp"

namespace hyparr {

// Word over {-,0,+} indexed by hyperplane. Positive and negative positions
// are kept as two disjoint masks.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::size_t n) : n_(n) {}
  SignVector(std::size_t n, HyperplaneSet plus, HyperplaneSet minus);

  // Parses "+-0" words; throws Error(kParse) on other characters.
  static SignVector from_string(std::string_view word);
  // Every position +.
  static SignVector all_plus(std::size_t n) { return SignVector(n, HyperplaneSet::full(n), {}); }

  std::size_t size() const { return n_; }
  Sign at(std::size_t i) const {
    return plus_.contains(i) ? Sign::kPlus : minus_.contains(i) ? Sign::kMinus : Sign::kZero;
  }
  void set(std::size_t i, Sign s);

  HyperplaneSet positive() const { return plus_; }
  HyperplaneSet negative() const { return minus_; }
  HyperplaneSet support() const { return plus_ | minus_; }
  HyperplaneSet zero_set() const { return HyperplaneSet::full(n_) - support(); }
  bool is_full() const { return support() == HyperplaneSet::full(n_); }
  bool is_zero() const { return support().empty(); }

  SignVector operator-() const { return SignVector(n_, minus_, plus_); }

  // Opposite sign on every position of `which`.
  SignVector flipped(HyperplaneSet which) const;
  // Zero on every position of `which`.
  SignVector with_zeros(HyperplaneSet which) const;
  // Position-wise product with a full word (reorientation).
  SignVector reoriented(const SignVector& by) const;
  // Agrees with `other` on the support of *this (x <= other in the face order).
  bool conforms_to(const SignVector& other) const;

  std::string to_string() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;
  // Lexicographic on the word, with + < - < 0 (ASCII order of the characters).
  friend std::strong_ordering operator<=>(const SignVector& a, const SignVector& b);

 private:
  std::size_t n_ = 0;
  HyperplaneSet plus_;
  HyperplaneSet minus_;
};

// (x o y)(h) = x(h) if x(h) != 0 else y(h). Throws kLengthMismatch.
SignVector compose(const SignVector& x, const SignVector& y);

// Hyperplanes where two words take opposite nonzero signs.
HyperplaneSet separation(const SignVector& c, const SignVector& d);

struct SignVectorHash {
  std::size_t operator()(const SignVector& v) const noexcept {
    return std::hash<std::uint64_t>{}(v.positive().bits() * 0x9E3779B97F4A7C15ULL ^ v.negative().bits());
  }
};

}  // namespace hyparr
