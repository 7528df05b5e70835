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

#include "hyparr/supersolvable.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hyparr/error.hpp"

namespace hyparr {
namespace {

std::size_t sum_dimension(const Flat& x, const Flat& y, std::size_t dim) {
  std::vector<Vector> rows = x.basis;
  rows.insert(rows.end(), y.basis.begin(), y.basis.end());
  return rank(rows, dim);
}

void require_flat(const Arrangement& a, const Flat& x) {
  if (!is_flat(a, x)) throw Error(Errc::kNotAFlat, a.format_set(x.contains) + " is not a flat");
}

// Map a flat of a localization back to the parent arrangement.
Flat lift(const Arrangement& parent, const Localization& loc, const Flat& local) {
  HyperplaneSet key;
  local.contains.for_each([&](std::size_t h) { key.insert(loc.to_parent[h]); });
  return flat_closure(parent, key);
}

// First nonzero entry positive; identifies a hyperplane up to orientation.
Vector unoriented(Vector v) {
  v = primitive(v);
  for (const Rational& q : v) {
    if (q == 0) continue;
    if (q < 0) {
      for (Rational& r : v) r = -r;
    }
    break;
  }
  return v;
}

}  // namespace

bool is_modular(const Arrangement& a, const std::vector<Flat>& flats, const Flat& x) {
  require_flat(a, x);
  for (const Flat& y : flats) {
    const HyperplaneSet common = x.contains & y.contains;
    if (a.rank_of(common) != a.dim() - sum_dimension(x, y, a.dim())) return false;
  }
  return true;
}

bool is_modular(const Arrangement& a, const Flat& x) { return is_modular(a, intersection_lattice(a), x); }

std::optional<ModularFlag> is_supersolvable(const Arrangement& a) {
  const std::size_t r = a.rank();
  const std::vector<Flat> flats = intersection_lattice(a);
  if (r <= 2) {
    ModularFlag flag;
    if (r == 2) {
      const auto it = std::find_if(flats.begin(), flats.end(), [](const Flat& f) { return f.codim == 1; });
      flag.flats.push_back(*it);
    }
    return flag;
  }
  for (const Flat& l : flats) {
    if (l.codim != r - 1 || !is_modular(a, flats, l)) continue;
    const Localization loc = localization(a, l);
    auto sub = is_supersolvable(loc.arrangement);
    if (!sub) continue;
    ModularFlag flag;
    for (const Flat& y : sub->flats) flag.flats.push_back(lift(a, loc, y));
    flag.flats.push_back(l);
    return flag;
  }
  return std::nullopt;
}

namespace {

// Extends flag.flats (codims 1..k) downward with modular flats satisfying `ok`.
bool extend_flag(const Arrangement& a, const std::vector<Flat>& flats, std::vector<Flat>& chain,
                 const std::function<bool(const Flat&)>& ok) {
  if (chain.size() + 1 == a.rank() || a.rank() <= 1) return true;
  const std::size_t codim = chain.size() + 1;
  for (const Flat& x : flats) {
    if (x.codim != codim) continue;
    if (!chain.empty() && !chain.back().contains.is_subset_of(x.contains)) continue;
    if (!ok(x) || !is_modular(a, flats, x)) continue;
    chain.push_back(x);
    if (extend_flag(a, flats, chain, ok)) return true;
    chain.pop_back();
  }
  return false;
}

}  // namespace

std::optional<ModularFlag> modular_flag_by_search(const Arrangement& a) {
  const std::vector<Flat> flats = intersection_lattice(a);
  std::vector<Flat> chain;
  if (!extend_flag(a, flats, chain, [](const Flat&) { return true; })) return std::nullopt;
  return ModularFlag{chain};
}

std::optional<ModularFlag> incident_modular_flag(const PointedArrangement& pa) {
  std::vector<Flat> chain;
  const auto ok = [&](const Flat& x) { return is_incident(pa, pa.c0(), x); };
  if (!extend_flag(pa.arrangement(), pa.flats(), chain, ok)) return std::nullopt;
  return ModularFlag{chain};
}

Arrangement supersolvable_extension(const Arrangement& a) {
  const std::size_t r = a.rank();
  if (r <= 2) return a;
  const std::vector<Flat> flats = intersection_lattice(a);
  const Flat* line = nullptr;
  for (const Flat& x : flats) {
    if (x.codim != r - 1) continue;
    if (line == nullptr || x.contains.size() > line->contains.size()) line = &x;
  }
  // A_0: hyperplanes through l, plus l + (H ∩ H') for H, H' off l.
  std::vector<Vector> base;
  std::map<Vector, bool> seen;
  line->contains.for_each([&](std::size_t h) {
    base.push_back(a.normal(h));
    seen[unoriented(a.normal(h))] = true;
  });
  const std::vector<std::size_t> off = (a.all() - line->contains).indices();
  for (std::size_t i = 0; i < off.size(); ++i) {
    for (std::size_t j = i + 1; j < off.size(); ++j) {
      const Flat pair = flat_closure(a, HyperplaneSet{off[i], off[j]});
      std::vector<Vector> rows = line->basis;
      rows.insert(rows.end(), pair.basis.begin(), pair.basis.end());
      const std::vector<Vector> normal = kernel_basis(Matrix(a.dim(), rows));
      if (normal.size() != 1) continue;  // sum is not a hyperplane
      if (seen.emplace(unoriented(normal[0]), true).second) base.push_back(primitive(normal[0]));
    }
  }
  const Arrangement extended_base = supersolvable_extension(build_arrangement(a.dim(), base));

  std::vector<Vector> normals;
  std::vector<std::string> labels = a.labels();
  std::map<Vector, bool> present;
  for (std::size_t h = 0; h < a.size(); ++h) {
    normals.push_back(a.normal(h));
    present[unoriented(a.normal(h))] = true;
  }
  std::size_t added = 0;
  for (std::size_t h = 0; h < extended_base.size(); ++h) {
    if (!present.emplace(unoriented(extended_base.normal(h)), true).second) continue;
    normals.push_back(extended_base.normal(h));
    labels.push_back("e" + std::to_string(++added));
  }
  return build_arrangement(a.dim(), std::move(normals), std::move(labels));
}

std::vector<std::size_t> fiber_order(const PointedArrangement& pa, const Flat& l) {
  const Arrangement& a = pa.arrangement();
  require_flat(a, l);
  if (l.codim + 1 != a.rank() || !is_modular(a, pa.flats(), l)) {
    throw Error(Errc::kNotModular, a.format_set(l.contains) + " is not a modular line");
  }
  if (!is_incident(pa, pa.c0(), l)) {
    throw Error(Errc::kNotIncident, "c0 is not incident to " + a.format_set(l.contains));
  }
  std::vector<HyperplaneSet> fiber;
  for (const Chamber& c : pa.chambers()) {
    const HyperplaneSet s = pa.separation(c.sign);
    if (!s.intersects(l.contains)) fiber.push_back(s);
  }
  std::sort(fiber.begin(), fiber.end(), [](HyperplaneSet x, HyperplaneSet y) { return x.size() < y.size(); });
  const HyperplaneSet off = a.all() - l.contains;
  std::vector<std::size_t> order;
  bool chain = fiber.size() == off.size() + 1;
  for (std::size_t i = 1; chain && i < fiber.size(); ++i) {
    const HyperplaneSet step = fiber[i] - fiber[i - 1];
    chain = fiber[i - 1].is_subset_of(fiber[i]) && step.size() == 1;
    if (chain) order.push_back(step.front());
  }
  if (!chain) throw Error(Errc::kNotAChain, "fiber over " + a.format_set(l.contains) + " is not a chain");
  return order;
}

bool check_fiber_betweenness(const PointedArrangement& pa, const Flat& l) {
  const Arrangement& a = pa.arrangement();
  const std::vector<std::size_t> order = fiber_order(pa, l);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t k = i + 2; k < order.size(); ++k) {
      const Flat pair = flat_closure(a, HyperplaneSet{order[i], order[k]});
      const Flat sum = flat_closure(a, pair.contains & l.contains);
      if (!is_incident(pa, pa.c0(), sum)) continue;
      for (std::size_t j = i + 1; j < k; ++j) {
        if (!pair.contains.contains(order[j])) return false;
      }
    }
  }
  return true;
}

}  // namespace hyparr
