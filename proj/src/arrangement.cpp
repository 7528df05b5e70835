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

#include "hyparr/arrangement.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>
#include <utility>

#include "hyparr/error.hpp"

namespace hyparr {
namespace {

// Representative of the unoriented hyperplane: first nonzero entry positive.
Vector unoriented_key(const Vector& primitive_normal) {
  Vector key = primitive_normal;
  for (const Rational& q : key) {
    if (q == 0) continue;
    if (q < 0) {
      for (Rational& r : key) r = -r;
    }
    break;
  }
  return key;
}

bool annihilates(const Vector& normal, const std::vector<Vector>& basis) {
  return std::all_of(basis.begin(), basis.end(), [&](const Vector& b) { return dot(normal, b) == 0; });
}

}  // namespace

Arrangement build_arrangement(std::size_t dim, std::vector<Vector> normals, std::vector<std::string> labels) {
  if (normals.size() > HyperplaneSet::kCapacity) {
    throw Error(Errc::kTooManyHyperplanes, std::to_string(normals.size()) + " hyperplanes (limit 64)");
  }
  if (!labels.empty() && labels.size() != normals.size()) {
    throw Error(Errc::kLengthMismatch, "label count differs from hyperplane count");
  }
  Arrangement a;
  a.dim_ = dim;
  std::map<Vector, std::size_t> seen;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (normals[i].size() != dim) {
      throw Error(Errc::kLengthMismatch, "normal " + std::to_string(i) + " has length " +
                                             std::to_string(normals[i].size()) + ", expected " + std::to_string(dim));
    }
    if (is_zero(normals[i])) throw Error(Errc::kZeroNormal, "normal " + std::to_string(i) + " is zero");
    Vector p = primitive(normals[i]);
    auto [it, inserted] = seen.emplace(unoriented_key(p), i);
    if (!inserted) {
      throw Error(Errc::kDuplicateHyperplane,
                  "hyperplanes " + std::to_string(it->second) + " and " + std::to_string(i) + " coincide");
    }
    a.hyperplanes_.push_back(Hyperplane{std::move(p), i});
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < normals.size(); ++i) labels.push_back(std::to_string(i));
  }
  a.labels_ = std::move(labels);
  a.rank_ = a.rank_of(a.all());
  return a;
}

std::vector<Vector> Arrangement::normals(HyperplaneSet members) const {
  std::vector<Vector> out;
  members.for_each([&](std::size_t i) { out.push_back(hyperplanes_[i].normal); });
  return out;
}

std::size_t Arrangement::rank_of(HyperplaneSet members) const {
  const std::vector<Vector> rows = normals(members);
  return hyparr::rank(rows, dim_);
}

std::string Arrangement::format_set(HyperplaneSet s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ',';
    out += labels_[i];
    first = false;
  });
  return out + "}";
}

std::string Arrangement::format_order(std::span<const std::size_t> order) const {
  const bool compact = std::all_of(labels_.begin(), labels_.end(), [](const std::string& l) { return l.size() == 1; });
  std::string out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (!compact && k > 0) out += ',';
    out += labels_[order[k]];
  }
  return out;
}

std::vector<std::size_t> Arrangement::parse_order(const std::string& text) const {
  const bool compact = std::all_of(labels_.begin(), labels_.end(), [](const std::string& l) { return l.size() == 1; });
  std::vector<std::string> tokens;
  if (compact && text.find(',') == std::string::npos) {
    for (char ch : text) tokens.emplace_back(1, ch);
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t comma = std::min(text.find(',', start), text.size());
      tokens.push_back(text.substr(start, comma - start));
      start = comma + 1;
    }
  }
  std::vector<std::size_t> order;
  for (const std::string& t : tokens) {
    const auto it = std::find(labels_.begin(), labels_.end(), t);
    if (it == labels_.end()) throw Error(Errc::kParse, "unknown hyperplane label '" + t + "'");
    order.push_back(static_cast<std::size_t>(it - labels_.begin()));
  }
  return order;
}

Flat flat_closure(const Arrangement& a, HyperplaneSet members) {
  Flat x;
  x.basis = kernel_basis(Matrix(a.dim(), a.normals(members)));
  x.codim = a.dim() - x.basis.size();
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (annihilates(a.normal(h), x.basis)) x.contains.insert(h);
  }
  return x;
}

std::vector<Flat> intersection_lattice(const Arrangement& a) {
  std::vector<Flat> flats;
  std::unordered_set<HyperplaneSet, HyperplaneSetHash> keys;
  flats.push_back(flat_closure(a, {}));
  keys.insert(flats.front().contains);
  for (std::size_t next = 0; next < flats.size(); ++next) {
    const HyperplaneSet base = flats[next].contains;
    for (std::size_t h = 0; h < a.size(); ++h) {
      if (base.contains(h)) continue;
      HyperplaneSet members = base;
      members.insert(h);
      Flat y = flat_closure(a, members);
      if (keys.insert(y.contains).second) flats.push_back(std::move(y));
    }
  }
  std::sort(flats.begin(), flats.end(), [](const Flat& x, const Flat& y) {
    if (x.codim != y.codim) return x.codim < y.codim;
    return x.contains < y.contains;
  });
  return flats;
}

bool is_flat(const Arrangement& a, const Flat& x) {
  if (!x.contains.is_subset_of(a.all())) return false;
  return flat_closure(a, x.contains).contains == x.contains;
}

Localization localization(const Arrangement& a, const Flat& x) {
  if (!is_flat(a, x)) throw Error(Errc::kNotAFlat, a.format_set(x.contains) + " is not a flat");
  Localization loc;
  loc.from_parent.assign(a.size(), std::nullopt);
  std::vector<Vector> normals;
  std::vector<std::string> labels;
  x.contains.for_each([&](std::size_t h) {
    loc.from_parent[h] = loc.to_parent.size();
    loc.to_parent.push_back(h);
    normals.push_back(a.normal(h));
    labels.push_back(a.label(h));
  });
  loc.arrangement = build_arrangement(a.dim(), std::move(normals), std::move(labels));
  return loc;
}

Restriction restriction(const Arrangement& a, const Flat& x) {
  if (!is_flat(a, x)) throw Error(Errc::kNotAFlat, a.format_set(x.contains) + " is not a flat");
  Restriction res;
  res.basis = x.basis;
  res.trace_of.assign(a.size(), std::nullopt);
  std::map<Vector, std::size_t> by_key;
  std::vector<Vector> normals;
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (x.contains.contains(h)) continue;
    Vector trace;
    trace.reserve(res.basis.size());
    for (const Vector& b : res.basis) trace.push_back(dot(a.normal(h), b));
    trace = primitive(trace);
    auto [it, inserted] = by_key.emplace(unoriented_key(trace), normals.size());
    if (inserted) {
      normals.push_back(std::move(trace));
      res.preimages.emplace_back();
    }
    res.trace_of[h] = it->second;
    res.preimages[it->second].push_back(h);
  }
  std::vector<std::string> labels;
  for (const std::vector<std::size_t>& pre : res.preimages) {
    std::string label;
    for (std::size_t k = 0; k < pre.size(); ++k) label += (k ? "/" : "") + a.label(pre[k]);
    labels.push_back(std::move(label));
  }
  res.arrangement = build_arrangement(res.basis.size(), std::move(normals), std::move(labels));
  return res;
}

Restriction restriction(const Arrangement& a, std::size_t hyperplane) {
  HyperplaneSet s;
  s.insert(hyperplane);
  return restriction(a, flat_closure(a, s));
}

}  // namespace hyparr
