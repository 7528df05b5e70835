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

#include "hyparr/chamber_order.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>
#include <utility>

#include "hyparr/error.hpp"

namespace hyparr {

ArrangementData::ArrangementData(Arrangement a)
    : arrangement(std::move(a)),
      chambers(enumerate_chambers(arrangement)),
      table(arrangement.size(), chambers),
      circuits(enumerate_circuits(arrangement)),
      flats(intersection_lattice(arrangement)) {
  for (std::size_t i = 0; i < flats.size(); ++i) {
    if (flats[i].codim == 2) l2.push_back(i);
  }
}

PointedArrangement::PointedArrangement(Arrangement a, SignVector c0)
    : PointedArrangement(std::make_shared<const ArrangementData>(std::move(a)), std::move(c0)) {}

PointedArrangement::PointedArrangement(std::shared_ptr<const ArrangementData> data, SignVector c0)
    : data_(std::move(data)), c0_(std::move(c0)) {
  const Arrangement& a = data_->arrangement;
  if (!data_->table.contains(c0_)) {
    throw Error(Errc::kNotAChamber, "'" + c0_.to_string() + "' is not a chamber");
  }
  std::vector<Vector> normals;
  for (std::size_t h = 0; h < a.size(); ++h) {
    Vector v = a.normal(h);
    if (c0_.at(h) == Sign::kMinus) {
      for (Rational& q : v) q = -q;
    }
    normals.push_back(std::move(v));
  }
  reoriented_ = build_arrangement(a.dim(), std::move(normals), a.labels());
  for (const Circuit& c : data_->circuits) reoriented_circuits_.push_back(c.sign.reoriented(c0_));
  for (std::size_t i = 0; i < data_->chambers.size(); ++i) {
    index_by_plus_.emplace(data_->chambers[i].sign.positive().bits(), i);
  }
}

std::optional<std::size_t> PointedArrangement::chamber_index(const SignVector& w) const {
  if (!is_chamber(w)) return std::nullopt;
  return index_by_plus_.at(w.positive().bits());
}

ChamberPoset::ChamberPoset(const PointedArrangement& pa) {
  const std::size_t count = pa.chambers().size();
  chambers_.reserve(count);
  for (const Chamber& c : pa.chambers()) {
    by_sep_.emplace(pa.separation(c.sign).bits(), chambers_.size());
    sep_.push_back(pa.separation(c.sign));
    chambers_.push_back(c.sign);
  }
  up_.resize(count);
  down_.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    (pa.all() - sep_[i]).for_each([&](std::size_t h) {
      HyperplaneSet bigger = sep_[i];
      bigger.insert(h);
      if (auto j = index_of(bigger)) {
        up_[i].push_back(*j);
        down_[*j].push_back(i);
      }
    });
  }
  for (auto& list : down_) std::sort(list.begin(), list.end());
  bottom_ = *index_of(HyperplaneSet{});
  top_ = *index_of(pa.all());
}

std::optional<std::size_t> ChamberPoset::index_of(HyperplaneSet sep) const {
  const auto it = by_sep_.find(sep.bits());
  if (it == by_sep_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ChamberPoset::index_of(const SignVector& chamber) const {
  if (chamber.size() != chambers_[bottom_].size()) return std::nullopt;
  const auto idx = index_of(separation(chambers_[bottom_], chamber));
  if (!idx || chambers_[*idx] != chamber) return std::nullopt;
  return idx;
}

std::optional<std::size_t> ChamberPoset::join(const std::vector<std::size_t>& elements) const {
  HyperplaneSet u;
  for (std::size_t e : elements) u |= sep_[e];
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < size(); ++k) {
    if (u.is_subset_of(sep_[k]) && (!best || sep_[k].size() < sep_[*best].size())) best = k;
  }
  if (!best) return std::nullopt;
  for (std::size_t k = 0; k < size(); ++k) {
    if (u.is_subset_of(sep_[k]) && !leq(*best, k)) return std::nullopt;
  }
  return best;
}

std::optional<std::size_t> ChamberPoset::join(std::size_t i, std::size_t j) const { return join({i, j}); }

std::optional<std::size_t> ChamberPoset::meet(std::size_t i, std::size_t j) const {
  const HyperplaneSet common = sep_[i] & sep_[j];
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < size(); ++k) {
    if (sep_[k].is_subset_of(common) && (!best || sep_[k].size() > sep_[*best].size())) best = k;
  }
  for (std::size_t k = 0; k < size(); ++k) {
    if (sep_[k].is_subset_of(common) && !leq(k, *best)) return std::nullopt;
  }
  return best;
}

bool ChamberPoset::is_lattice() const {
  for (std::size_t x = 0; x < size(); ++x) {
    const auto& covers = up_[x];
    for (std::size_t a = 0; a < covers.size(); ++a) {
      for (std::size_t b = a + 1; b < covers.size(); ++b) {
        if (!join(covers[a], covers[b])) return false;
      }
    }
  }
  return true;
}

ChamberPoset build_poset(const PointedArrangement& pa) { return ChamberPoset(pa); }

HyperplaneSet walls(const PointedArrangement& pa, const SignVector& c) {
  HyperplaneSet out;
  for (std::size_t h = 0; h < pa.size(); ++h) {
    HyperplaneSet one;
    one.insert(h);
    if (pa.is_chamber(c.flipped(one))) out.insert(h);
  }
  return out;
}

HyperplaneSet walls_by_feasibility(const Arrangement& a, const SignVector& c) {
  HyperplaneSet out;
  for (std::size_t h = 0; h < a.size(); ++h) {
    HyperplaneSet one;
    one.insert(h);
    if (realize(a, c.with_zeros(one))) out.insert(h);
  }
  return out;
}

bool is_incident(const PointedArrangement& pa, const SignVector& c, const Flat& x) {
  if (!is_flat(pa.arrangement(), x)) {
    throw Error(Errc::kNotAFlat, pa.arrangement().format_set(x.contains) + " is not a flat");
  }
  return is_covector(pa.table(), pa.chambers(), c.with_zeros(x.contains));
}

namespace {

class SeparationIncidence {
 public:
  SeparationIncidence(const PointedArrangement& pa, const SignVector& c) : pa_(pa) {
    for (const Chamber& d : pa.chambers()) seps_.push_back(separation(c, d.sign));
  }

  // Is c restricted to the localization with hyperplanes `scope` incident to
  // the flat with key `target` (target ⊆ scope)?
  bool incident(HyperplaneSet scope, HyperplaneSet target) {
    const auto key = std::make_pair(scope.bits(), target.bits());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool ok = true;
    for (const Flat& y : pa_.flats()) {
      if (!y.contains.is_subset_of(target)) continue;
      const bool antecedent = y.contains == target || incident(target, y.contains);
      if (!antecedent) continue;
      const bool found = std::any_of(seps_.begin(), seps_.end(),
                                     [&](HyperplaneSet s) { return (s & scope) == y.contains; });
      if (!found) {
        ok = false;
        break;
      }
    }
    memo_.emplace(key, ok);
    return ok;
  }

 private:
  const PointedArrangement& pa_;
  std::vector<HyperplaneSet> seps_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, bool> memo_;
};

}  // namespace

bool is_incident_by_separation(const PointedArrangement& pa, const SignVector& c, const Flat& x) {
  if (!is_flat(pa.arrangement(), x)) {
    throw Error(Errc::kNotAFlat, pa.arrangement().format_set(x.contains) + " is not a flat");
  }
  SeparationIncidence search(pa, c);
  return search.incident(pa.all(), x.contains);
}

bool is_simplicial_chamber(const PointedArrangement& pa, const SignVector& c) {
  const HyperplaneSet w = walls(pa, c);
  const std::size_t r = pa.arrangement().rank();
  return w.size() == r && pa.arrangement().rank_of(w) == r;
}

bool is_simplicial(const PointedArrangement& pa) {
  return std::all_of(pa.chambers().begin(), pa.chambers().end(),
                     [&](const Chamber& c) { return is_simplicial_chamber(pa, c.sign); });
}

bool is_simplicial(const Arrangement& a) {
  auto data = std::make_shared<const ArrangementData>(a);
  const SignVector c0 = data->chambers.front().sign;
  return is_simplicial(PointedArrangement(std::move(data), c0));
}

HyperplaneSet walls_on_side(const PointedArrangement& pa, const SignVector& c, WallSide side) {
  const HyperplaneSet w = walls(pa, c);
  const HyperplaneSet s = pa.separation(c);
  return side == WallSide::kLower ? (w & s) : (w - s);
}

bool is_bineighborly(const PointedArrangement& pa, WallSide side) {
  const Arrangement& a = pa.arrangement();
  for (const Chamber& c : pa.chambers()) {
    const std::vector<std::size_t> u = walls_on_side(pa, c.sign, side).indices();
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (std::size_t j = i + 1; j < u.size(); ++j) {
        if (!is_incident(pa, c.sign, flat_closure(a, HyperplaneSet{u[i], u[j]}))) return false;
      }
    }
  }
  return true;
}

bool is_bisimplicial(const PointedArrangement& pa, WallSide side) {
  const Arrangement& a = pa.arrangement();
  return std::all_of(pa.chambers().begin(), pa.chambers().end(), [&](const Chamber& c) {
    const HyperplaneSet u = walls_on_side(pa, c.sign, side);
    return a.rank_of(u) == u.size();
  });
}

std::size_t depth(const PointedArrangement& pa, std::size_t h) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const Chamber& c : pa.chambers()) {
    const HyperplaneSet s = pa.separation(c.sign);
    if (s.contains(h)) best = std::min(best, s.size());
  }
  return best;
}

}  // namespace hyparr
