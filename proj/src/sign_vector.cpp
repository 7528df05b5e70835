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

#include "hyparr/sign_vector.hpp"

#include <bit>

#include "hyparr/error.hpp"

namespace hyparr {
namespace {

int char_rank(Sign s) { return s == Sign::kPlus ? 0 : s == Sign::kMinus ? 1 : 2; }

}  // namespace

std::string HyperplaneSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](std::size_t i) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  });
  return out + "}";
}

SignVector::SignVector(std::size_t n, HyperplaneSet plus, HyperplaneSet minus)
    : n_(n), plus_(plus), minus_(minus) {
  if (n > HyperplaneSet::kCapacity) throw Error(Errc::kTooManyHyperplanes, "sign vector longer than 64");
  if (plus.intersects(minus) || !(plus | minus).is_subset_of(HyperplaneSet::full(n))) {
    throw Error(Errc::kLengthMismatch, "sign masks do not describe a word of length " + std::to_string(n));
  }
}

SignVector SignVector::from_string(std::string_view word) {
  if (word.size() > HyperplaneSet::kCapacity) throw Error(Errc::kTooManyHyperplanes, "sign word longer than 64");
  SignVector v(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    switch (word[i]) {
      case '+': v.plus_.insert(i); break;
      case '-': v.minus_.insert(i); break;
      case '0': break;
      default:
        throw Error(Errc::kParse, "bad sign character '" + std::string(1, word[i]) + "' in '" + std::string(word) + "'");
    }
  }
  return v;
}

void SignVector::set(std::size_t i, Sign s) {
  plus_.erase(i);
  minus_.erase(i);
  if (s == Sign::kPlus) plus_.insert(i);
  if (s == Sign::kMinus) minus_.insert(i);
}

SignVector SignVector::flipped(HyperplaneSet which) const {
  const HyperplaneSet p = plus_ & which;
  const HyperplaneSet m = minus_ & which;
  return SignVector(n_, (plus_ - which) | m, (minus_ - which) | p);
}

SignVector SignVector::with_zeros(HyperplaneSet which) const {
  return SignVector(n_, plus_ - which, minus_ - which);
}

SignVector SignVector::reoriented(const SignVector& by) const {
  if (by.n_ != n_) throw Error(Errc::kLengthMismatch, "reorientation word of different length");
  return flipped(by.minus_);
}

bool SignVector::conforms_to(const SignVector& other) const {
  return plus_.is_subset_of(other.plus_) && minus_.is_subset_of(other.minus_);
}

std::string SignVector::to_string() const {
  std::string out(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) out[i] = to_char(at(i));
  return out;
}

std::strong_ordering operator<=>(const SignVector& a, const SignVector& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  const std::uint64_t diff = (a.plus_ ^ b.plus_).bits() | (a.minus_ ^ b.minus_).bits();
  if (diff == 0) return std::strong_ordering::equal;
  const auto d = static_cast<std::size_t>(std::countr_zero(diff));
  return char_rank(a.at(d)) <=> char_rank(b.at(d));
}

SignVector compose(const SignVector& x, const SignVector& y) {
  if (x.size() != y.size()) throw Error(Errc::kLengthMismatch, "compose of words of different length");
  const HyperplaneSet s = x.support();
  return SignVector(x.size(), x.positive() | (y.positive() - s), x.negative() | (y.negative() - s));
}

HyperplaneSet separation(const SignVector& c, const SignVector& d) {
  if (c.size() != d.size()) throw Error(Errc::kLengthMismatch, "separation of words of different length");
  return (c.positive() & d.negative()) | (c.negative() & d.positive());
}

}  // namespace hyparr
