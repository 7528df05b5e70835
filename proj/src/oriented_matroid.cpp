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

#include "hyparr/oriented_matroid.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "hyparr/error.hpp"

namespace hyparr {

std::vector<SignConstraint> sign_constraints(const Arrangement& a, const SignVector& x) {
  if (x.size() != a.size()) {
    throw Error(Errc::kLengthMismatch, "word of length " + std::to_string(x.size()) + " for " +
                                           std::to_string(a.size()) + " hyperplanes");
  }
  std::vector<SignConstraint> out;
  out.reserve(a.size());
  for (std::size_t h = 0; h < a.size(); ++h) out.push_back(SignConstraint{a.normal(h), x.at(h)});
  return out;
}

std::optional<Covector> realize(const Arrangement& a, const SignVector& x) {
  if (a.size() == 0) return Covector{x, Vector(a.dim(), 0)};
  auto witness = strict_feasible(sign_constraints(a, x));
  if (!witness) return std::nullopt;
  return Covector{x, std::move(*witness)};
}

std::vector<Chamber> enumerate_chambers(const Arrangement& a) {
  const std::size_t n = a.size();
  if (n == 0) return {Chamber{SignVector(0), Vector(a.dim(), 0)}};

  // A nonzero normal vanishes at finitely many points of the moment curve.
  Vector seed(a.dim());
  SignVector start(n);
  for (long t = 1;; ++t) {
    Rational power = 1;
    for (Rational& coord : seed) {
      coord = power;
      power *= t;
    }
    bool generic = true;
    for (std::size_t h = 0; h < n && generic; ++h) {
      const Sign s = sign_of(dot(a.normal(h), seed));
      generic = s != Sign::kZero;
      start.set(h, s);
    }
    if (generic) break;
  }

  std::vector<Chamber> chambers{Chamber{start, seed}};
  std::unordered_set<std::uint64_t> visited{start.positive().bits()};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const SignVector current = chambers[queue.front()].sign;
    queue.pop_front();
    for (std::size_t h = 0; h < n; ++h) {
      HyperplaneSet one;
      one.insert(h);
      const SignVector next = current.flipped(one);
      if (!visited.insert(next.positive().bits()).second) continue;
      if (auto co = realize(a, next)) {
        queue.push_back(chambers.size());
        chambers.push_back(Chamber{next, std::move(co->witness)});
      }
    }
  }
  std::sort(chambers.begin(), chambers.end());
  return chambers;
}

std::vector<Circuit> enumerate_circuits(const Arrangement& a) {
  const std::size_t n = a.size();
  std::vector<Circuit> circuits;
  const std::size_t max_size = std::min(n, a.rank() + 1);
  for (std::size_t k = 1; k <= max_size; ++k) {
    // Gosper's hack over k-subsets of {0..n-1}.
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = n == 64 ? 0 : std::uint64_t{1} << n;
    while (s != 0 && (n == 64 || s < limit)) {
      const HyperplaneSet support(s);
      const std::vector<std::size_t> members = support.indices();
      std::vector<Vector> rows(a.dim(), Vector(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) rows[j][i] = a.normal(members[i])[j];
      }
      const std::vector<Vector> kernel = kernel_basis(Matrix(k, std::move(rows)));
      if (kernel.size() == 1 && std::none_of(kernel[0].begin(), kernel[0].end(), [](const Rational& q) { return q == 0; })) {
        Vector local = primitive(kernel[0]);
        if (local[0] < 0) {
          for (Rational& q : local) q = -q;
        }
        Circuit c{SignVector(n), Vector(n, 0)};
        for (std::size_t i = 0; i < k; ++i) {
          c.coeffs[members[i]] = local[i];
          c.sign.set(members[i], sign_of(local[i]));
        }
        circuits.push_back(std::move(c));
      }
      const std::uint64_t lowest = s & (~s + 1);
      const std::uint64_t ripple = s + lowest;
      if (ripple == 0) break;
      s = (((ripple ^ s) >> 2) / lowest) | ripple;
    }
  }
  std::sort(circuits.begin(), circuits.end(),
            [](const Circuit& x, const Circuit& y) { return x.support() < y.support(); });
  return circuits;
}

ChamberTable::ChamberTable(std::size_t n, const std::vector<Chamber>& chambers) : n_(n) {
  for (const Chamber& c : chambers) plus_masks_.insert(c.sign.positive().bits());
}

bool is_covector(const ChamberTable& table, const std::vector<Chamber>& chambers, const SignVector& x) {
  return std::all_of(chambers.begin(), chambers.end(),
                     [&](const Chamber& c) { return table.contains(compose(x, c.sign)); });
}

std::vector<Covector> covectors_with_zero_set(const Arrangement& a, const std::vector<Chamber>& chambers,
                                              const Flat& x) {
  if (!is_flat(a, x)) throw Error(Errc::kNotAFlat, a.format_set(x.contains) + " is not a flat");
  std::set<SignVector> candidates;
  for (const Chamber& c : chambers) candidates.insert(c.sign.with_zeros(x.contains));
  std::vector<Covector> out;
  for (const SignVector& word : candidates) {
    if (auto co = realize(a, word)) out.push_back(std::move(*co));
  }
  return out;
}

std::vector<Covector> enumerate_covectors(const Arrangement& a, const std::vector<Chamber>& chambers,
                                          const std::vector<Flat>& flats) {
  std::vector<Covector> out;
  for (const Flat& x : flats) {
    std::vector<Covector> part = covectors_with_zero_set(a, chambers, x);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hyparr
