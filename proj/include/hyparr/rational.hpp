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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hyparr {

// Arbitrary-precision rational. GMP keeps every mpq_class canonical
// (reduced, positive denominator, zero as 0/1) as long as values are built
// through parse_rational or arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p/q" or "p" with optional sign. Throws Error(kParse).
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& q);

}  // namespace hyparr
