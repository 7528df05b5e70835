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

// Oracles shared by the test files. None of them calls into the library's
// linear algebra or chamber search.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hyparr/arrangement.hpp"
#include "hyparr/chamber_order.hpp"

namespace hyparr::testing {

using IntRow = std::vector<long long>;

inline std::vector<IntRow> int_normals(const Arrangement& a) {
  std::vector<IntRow> out;
  for (std::size_t h = 0; h < a.size(); ++h) {
    IntRow row;
    for (const Rational& q : a.normal(h)) row.push_back(q.get_num().get_si());
    out.push_back(row);
  }
  return out;
}

// Fraction-free elimination in 64-bit integers; fine for the small entries
// used in tests.
inline std::size_t int_rank(std::vector<IntRow> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  long long prev = 1;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

// Whitney: the number of chambers is the sum over all subsets S of
// (-1)^(|S| - rank S).
inline long long whitney_chamber_count(const Arrangement& a) {
  const auto rows = int_normals(a);
  long long total = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << rows.size()); ++m) {
    std::vector<IntRow> sub;
    for (std::size_t h = 0; h < rows.size(); ++h) {
      if ((m >> h) & 1) sub.push_back(rows[h]);
    }
    total += ((sub.size() - int_rank(sub)) % 2 == 0) ? 1 : -1;
  }
  return total;
}

// Sign words of integer grid points off every hyperplane.
inline std::set<std::string> grid_chambers(const Arrangement& a, long long k) {
  const auto rows = int_normals(a);
  const std::size_t d = a.dim();
  std::set<std::string> out;
  std::vector<long long> x(d, -k);
  while (true) {
    std::string word;
    for (const IntRow& r : rows) {
      long long v = 0;
      for (std::size_t j = 0; j < d; ++j) v += r[j] * x[j];
      word += v > 0 ? '+' : v < 0 ? '-' : '0';
    }
    if (word.find('0') == std::string::npos) out.insert(word);
    std::size_t j = 0;
    while (j < d && x[j] == k) x[j++] = -k;
    if (j == d) break;
    ++x[j];
  }
  return out;
}

// Random central arrangement in Q^dim with entries in [-range, range],
// skipping zero and parallel normals.
inline Arrangement random_arrangement(std::mt19937& rng, std::size_t dim, std::size_t n, int range) {
  std::uniform_int_distribution<int> entry(-range, range);
  std::vector<Vector> normals;
  std::vector<IntRow> kept;
  while (normals.size() < n) {
    IntRow row(dim);
    for (auto& v : row) v = entry(rng);
    bool ok = int_rank({row}) == 1;
    for (const IntRow& other : kept) ok = ok && int_rank({row, other}) == 2;
    if (!ok) continue;
    kept.push_back(row);
    Vector v;
    for (long long e : row) v.emplace_back(static_cast<long>(e));
    normals.push_back(v);
  }
  return build_arrangement(dim, normals, {});
}

inline std::set<std::string> words(const std::vector<Chamber>& chambers) {
  std::set<std::string> out;
  for (const Chamber& c : chambers) out.insert(c.sign.to_string());
  return out;
}

inline std::size_t label_index(const Arrangement& a, const std::string& label) {
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (a.label(h) == label) return h;
  }
  throw std::runtime_error("no label " + label);
}

inline HyperplaneSet labelled(const Arrangement& a, std::initializer_list<const char*> labels) {
  HyperplaneSet s;
  for (const char* l : labels) s.insert(label_index(a, l));
  return s;
}

inline Flat flat_of(const Arrangement& a, std::initializer_list<const char*> labels) {
  return flat_closure(a, labelled(a, labels));
}

}  // namespace hyparr::testing
