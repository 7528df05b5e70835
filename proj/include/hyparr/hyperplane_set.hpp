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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hyparr {

// Subset of hyperplane indices 0..63 stored as a bitmask.
class HyperplaneSet {
 public:
  static constexpr std::size_t kCapacity = 64;

  constexpr HyperplaneSet() = default;
  constexpr explicit HyperplaneSet(std::uint64_t bits) : bits_(bits) {}
  HyperplaneSet(std::initializer_list<std::size_t> indices) {
    for (std::size_t i : indices) insert(i);
  }

  static constexpr HyperplaneSet full(std::size_t n) {
    return HyperplaneSet(n >= kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static HyperplaneSet from_indices(const std::vector<std::size_t>& indices) {
    HyperplaneSet s;
    for (std::size_t i : indices) s.insert(i);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(std::size_t i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(std::size_t i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr void toggle(std::size_t i) { bits_ ^= std::uint64_t{1} << i; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_subset_of(HyperplaneSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(HyperplaneSet other) const { return (bits_ & other.bits_) != 0; }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(static_cast<std::size_t>(std::countr_zero(b)));
  }

  // Smallest member; undefined for the empty set.
  constexpr std::size_t front() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  friend constexpr HyperplaneSet operator|(HyperplaneSet a, HyperplaneSet b) { return HyperplaneSet(a.bits_ | b.bits_); }
  friend constexpr HyperplaneSet operator&(HyperplaneSet a, HyperplaneSet b) { return HyperplaneSet(a.bits_ & b.bits_); }
  friend constexpr HyperplaneSet operator^(HyperplaneSet a, HyperplaneSet b) { return HyperplaneSet(a.bits_ ^ b.bits_); }
  friend constexpr HyperplaneSet operator-(HyperplaneSet a, HyperplaneSet b) { return HyperplaneSet(a.bits_ & ~b.bits_); }
  HyperplaneSet& operator|=(HyperplaneSet o) { bits_ |= o.bits_; return *this; }
  HyperplaneSet& operator&=(HyperplaneSet o) { bits_ &= o.bits_; return *this; }
  HyperplaneSet& operator^=(HyperplaneSet o) { bits_ ^= o.bits_; return *this; }
  HyperplaneSet& operator-=(HyperplaneSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(HyperplaneSet a, HyperplaneSet b) = default;

  // Canonical order: lexicographic on the sorted index lists.
  friend constexpr std::strong_ordering operator<=>(HyperplaneSet a, HyperplaneSet b) {
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return std::strong_ordering::equal;
    const int d = std::countr_zero(diff);
    const std::uint64_t above = d == 63 ? 0 : ~((std::uint64_t{2} << d) - 1);
    if ((a.bits_ >> d) & 1U) {
      // a has d where b has a larger element or has ended.
      return (b.bits_ & above) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return (a.bits_ & above) != 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }

  // "{0,2,5}"
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

struct HyperplaneSetHash {
  std::size_t operator()(HyperplaneSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

}  // namespace hyparr
