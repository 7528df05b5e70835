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

namespace hyparr {

enum class Sign : std::int8_t { kMinus = -1, kZero = 0, kPlus = 1 };

constexpr Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

constexpr Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

constexpr char to_char(Sign s) {
  return s == Sign::kPlus ? '+' : s == Sign::kMinus ? '-' : '0';
}

template <typename T>
Sign sign_of(const T& value) {
  const int s = sgn(value);
  return s > 0 ? Sign::kPlus : s < 0 ? Sign::kMinus : Sign::kZero;
}

}  // namespace hyparr
