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

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hyparr/arrangement.hpp"
#include "hyparr/oriented_matroid.hpp"

namespace hyparr {

// Everything about an arrangement that does not depend on the fundamental
// chamber. Shared between rebased copies of a PointedArrangement.
struct ArrangementData {
  Arrangement arrangement;
  std::vector<Chamber> chambers;  // canonical order
  ChamberTable table;
  std::vector<Circuit> circuits;
  std::vector<Flat> flats;      // sorted by (codim, key)
  std::vector<std::size_t> l2;  // indices into flats of codim 2

  explicit ArrangementData(Arrangement a);
};

// Arrangement with a fundamental chamber c0. S(c) always means S(c0, c).
// Closure computations work in the reorientation where c0 is all +.
class PointedArrangement {
 public:
  // Throws kNotAChamber if c0 is not a chamber.
  PointedArrangement(Arrangement a, SignVector c0);
  PointedArrangement(std::shared_ptr<const ArrangementData> data, SignVector c0);

  // Same arrangement, new fundamental chamber; shares cached data.
  PointedArrangement rebased(const SignVector& c) const { return PointedArrangement(data_, c); }

  const Arrangement& arrangement() const { return data_->arrangement; }
  const std::shared_ptr<const ArrangementData>& data() const { return data_; }
  std::size_t size() const { return data_->arrangement.size(); }
  HyperplaneSet all() const { return data_->arrangement.all(); }
  const SignVector& c0() const { return c0_; }
  const Arrangement& reoriented() const { return reoriented_; }

  const std::vector<Chamber>& chambers() const { return data_->chambers; }
  const ChamberTable& table() const { return data_->table; }
  const std::vector<Circuit>& circuits() const { return data_->circuits; }
  // Circuits multiplied by c0, so they are circuits of reoriented().
  const std::vector<SignVector>& reoriented_circuits() const { return reoriented_circuits_; }
  const std::vector<Flat>& flats() const { return data_->flats; }
  const std::vector<std::size_t>& l2() const { return data_->l2; }
  const Flat& l2_flat(std::size_t k) const { return data_->flats[data_->l2[k]]; }

  bool is_chamber(const SignVector& w) const { return data_->table.contains(w); }
  HyperplaneSet separation(const SignVector& c) const { return hyparr::separation(c0_, c); }
  // c0 with the signs on I reversed (a chamber only when I is separable).
  SignVector word_for(HyperplaneSet i) const { return c0_.flipped(i); }
  std::optional<std::size_t> chamber_index(const SignVector& w) const;

 private:
  std::shared_ptr<const ArrangementData> data_;
  SignVector c0_;
  Arrangement reoriented_;
  std::vector<SignVector> reoriented_circuits_;
  std::unordered_map<std::uint64_t, std::size_t> index_by_plus_;
};

// Chambers ordered by inclusion of separation sets from c0.
class ChamberPoset {
 public:
  explicit ChamberPoset(const PointedArrangement& pa);

  std::size_t size() const { return chambers_.size(); }
  const SignVector& chamber(std::size_t i) const { return chambers_[i]; }
  HyperplaneSet sep(std::size_t i) const { return sep_[i]; }
  std::size_t rank(std::size_t i) const { return sep_[i].size(); }
  std::size_t height() const { return sep_[top_].size(); }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return up_[i]; }
  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return down_[i]; }
  bool leq(std::size_t i, std::size_t j) const { return sep_[i].is_subset_of(sep_[j]); }
  std::optional<std::size_t> index_of(HyperplaneSet sep) const;
  std::optional<std::size_t> index_of(const SignVector& chamber) const;

  // Least upper bound / greatest lower bound by scanning all bounds.
  std::optional<std::size_t> join(std::size_t i, std::size_t j) const;
  std::optional<std::size_t> meet(std::size_t i, std::size_t j) const;
  std::optional<std::size_t> join(const std::vector<std::size_t>& elements) const;

  // Joins of pairs covering a common element (sufficient for finite posets),
  // confirmed by a full pairwise scan.
  bool is_lattice() const;

 private:
  std::vector<SignVector> chambers_;
  std::vector<HyperplaneSet> sep_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::unordered_map<std::uint64_t, std::size_t> by_sep_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

ChamberPoset build_poset(const PointedArrangement& pa);

// Hyperplanes whose reflection of c is again a chamber.
HyperplaneSet walls(const PointedArrangement& pa, const SignVector& c);
// Same set, decided by feasibility of the facet covector c with h zeroed.
HyperplaneSet walls_by_feasibility(const Arrangement& a, const SignVector& c);

// c is incident to X iff zeroing the hyperplanes of X in c gives a covector.
bool is_incident(const PointedArrangement& pa, const SignVector& c, const Flat& x);
// Separation-set criterion: for every flat Y of the localization at X that
// c_X is incident to, some chamber c' has S(c, c') equal to the hyperplanes
// containing Y. Decided recursively without any covector test.
bool is_incident_by_separation(const PointedArrangement& pa, const SignVector& c, const Flat& x);

bool is_simplicial_chamber(const PointedArrangement& pa, const SignVector& c);
bool is_simplicial(const PointedArrangement& pa);
bool is_simplicial(const Arrangement& a);

// Which walls of c a predicate ranges over: kLower = W(c) ∩ S(c0, c),
// kUpper = W(c) ∩ S(c, -c0).
enum class WallSide { kLower, kUpper };

HyperplaneSet walls_on_side(const PointedArrangement& pa, const SignVector& c, WallSide side);

bool is_bineighborly(const PointedArrangement& pa, WallSide side = WallSide::kLower);
bool is_bisimplicial(const PointedArrangement& pa, WallSide side = WallSide::kUpper);

// min |S(c)| over chambers c with h in S(c).
std::size_t depth(const PointedArrangement& pa, std::size_t h);

}  // namespace hyparr
