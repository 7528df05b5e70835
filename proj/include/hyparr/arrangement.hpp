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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyparr/hyperplane_set.hpp"
#include "hyparr/linalg.hpp"

namespace hyparr {

// H+ = {x : <normal, x> > 0}.
struct Hyperplane {
  Vector normal;
  std::size_t index = 0;
};

// Finite central arrangement in Q^dim. Hyperplane order defines indices.
// Normals are stored as primitive integer vectors with the caller's
// orientation; the rank is cached and may be smaller than dim.
class Arrangement {
 public:
  Arrangement() = default;

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return hyperplanes_.size(); }
  std::size_t rank() const { return rank_; }
  const Hyperplane& hyperplane(std::size_t i) const { return hyperplanes_[i]; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const Vector& normal(std::size_t i) const { return hyperplanes_[i].normal; }
  HyperplaneSet all() const { return HyperplaneSet::full(size()); }

  // Normals of the given members, in index order.
  std::vector<Vector> normals(HyperplaneSet members) const;
  std::size_t rank_of(HyperplaneSet members) const;

  // Labels default to the decimal index.
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  // "{A,B}" using labels.
  std::string format_set(HyperplaneSet s) const;
  // "BACD" when every label is one character, "12,34,13" otherwise.
  std::string format_order(std::span<const std::size_t> order) const;
  // Inverse of format_order; throws Error(kParse).
  std::vector<std::size_t> parse_order(const std::string& text) const;

  friend Arrangement build_arrangement(std::size_t, std::vector<Vector>, std::vector<std::string>);

 private:
  std::size_t dim_ = 0;
  std::size_t rank_ = 0;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<std::string> labels_;
};

// Throws kZeroNormal, kDuplicateHyperplane (parallel normals),
// kLengthMismatch, kTooManyHyperplanes (> 64).
Arrangement build_arrangement(std::size_t dim, std::vector<Vector> normals,
                              std::vector<std::string> labels = {});

// Intersection subspace, keyed by the hyperplanes containing it.
struct Flat {
  HyperplaneSet contains;
  std::vector<Vector> basis;  // kernel_basis of the normals in `contains`
  std::size_t codim = 0;

  friend bool operator==(const Flat& a, const Flat& b) { return a.contains == b.contains; }
};

// Flat spanned by intersecting `members`: contains every hyperplane whose
// normal lies in the span of the members' normals.
Flat flat_closure(const Arrangement& a, HyperplaneSet members);

// All flats including the ambient space, sorted by (codim, key).
std::vector<Flat> intersection_lattice(const Arrangement& a);

bool is_flat(const Arrangement& a, const Flat& x);

struct Localization {
  Arrangement arrangement;
  std::vector<std::size_t> to_parent;                   // local index -> parent index
  std::vector<std::optional<std::size_t>> from_parent;  // parent index -> local index
};

// Sub-arrangement of hyperplanes containing x, in the same ambient space.
// Throws kNotAFlat.
Localization localization(const Arrangement& a, const Flat& x);

struct Restriction {
  Arrangement arrangement;                           // lives in coordinates of `basis`
  std::vector<Vector> basis;                         // basis of the flat, from kernel_basis
  std::vector<std::optional<std::size_t>> trace_of;  // parent index -> trace index (none if H contains the flat)
  std::vector<std::vector<std::size_t>> preimages;   // trace index -> parent indices
};

// Traces {H ∩ X : H does not contain X}; coincident traces are merged.
Restriction restriction(const Arrangement& a, const Flat& x);
Restriction restriction(const Arrangement& a, std::size_t hyperplane);

}  // namespace hyparr
