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

#include "hyparr/kernels.hpp"

#include <algorithm>

#include <omp.h>

namespace hyparr::kernels {
namespace {

std::uint64_t power_of_three(std::size_t n) {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < n; ++i) p *= 3;
  return p;
}

// Digit k of `code` in base 3: 0 -> +, 1 -> -, 2 -> 0.
SignVector decode(std::uint64_t code, std::size_t n) {
  SignVector w(n);
  for (std::size_t k = 0; k < n; ++k, code /= 3) {
    const auto digit = code % 3;
    w.set(k, digit == 0 ? Sign::kPlus : digit == 1 ? Sign::kMinus : Sign::kZero);
  }
  return w;
}

template <typename T>
std::vector<T> merge(std::vector<std::vector<T>>& parts) {
  std::vector<T> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<SignVector> sign_pattern_scan_reference(const Arrangement& a) {
  const std::size_t n = a.size();
  std::vector<SignVector> out;
  const std::uint64_t total = power_of_three(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    SignVector w = decode(code, n);
    if (realize(a, w)) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignVector> sign_pattern_scan_parallel(const Arrangement& a) {
  const std::size_t n = a.size();
  const auto total = static_cast<std::int64_t>(power_of_three(n));
  std::vector<std::vector<SignVector>> parts(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t code = 0; code < total; ++code) {
    SignVector w = decode(static_cast<std::uint64_t>(code), n);
    if (realize(a, w)) parts[static_cast<std::size_t>(omp_get_thread_num())].push_back(std::move(w));
  }
  return merge(parts);
}

std::vector<std::uint64_t> biclosed_scan_reference(const TriangleTable& t, std::size_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (biclosed_mask(t, m)) out.push_back(m);
  }
  return out;
}

std::vector<std::uint64_t> biclosed_scan_parallel(const TriangleTable& t, std::size_t n) {
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << n);
  std::vector<std::vector<std::uint64_t>> parts(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel for schedule(static)
  for (std::int64_t m = 0; m < total; ++m) {
    if (biclosed_mask(t, static_cast<std::uint64_t>(m))) {
      parts[static_cast<std::size_t>(omp_get_thread_num())].push_back(static_cast<std::uint64_t>(m));
    }
  }
  return merge(parts);
}

namespace {

std::optional<std::size_t> closure_join(const PointedArrangement& pa, std::size_t i, std::size_t j) {
  const auto joined = join_via_2closure(pa, pa.chambers()[i].sign, pa.chambers()[j].sign);
  if (!joined) return std::nullopt;
  return pa.chamber_index(joined->sign);
}

}  // namespace

std::vector<std::optional<std::size_t>> closure_join_table_reference(const PointedArrangement& pa) {
  const std::size_t count = pa.chambers().size();
  std::vector<std::optional<std::size_t>> table(count * count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) table[i * count + j] = closure_join(pa, i, j);
  }
  return table;
}

std::vector<std::optional<std::size_t>> closure_join_table_parallel(const PointedArrangement& pa) {
  const auto count = static_cast<std::int64_t>(pa.chambers().size());
  std::vector<std::optional<std::size_t>> table(static_cast<std::size_t>(count * count));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    for (std::int64_t j = 0; j < count; ++j) {
      table[static_cast<std::size_t>(i * count + j)] =
          closure_join(pa, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  }
  return table;
}

}  // namespace hyparr::kernels

namespace hyparr::kernels {
namespace {

std::optional<std::size_t> single_difference(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::optional<std::size_t> where;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == b[k]) continue;
    if (where) return std::nullopt;
    where = k;
  }
  return where;
}

}  // namespace

std::vector<GalleryEdge> gallery_edges_reference(const std::vector<std::vector<std::string>>& signatures) {
  std::vector<GalleryEdge> edges;
  for (std::size_t i = 0; i < signatures.size(); ++i) {
    for (std::size_t j = i + 1; j < signatures.size(); ++j) {
      if (auto k = single_difference(signatures[i], signatures[j])) edges.push_back(GalleryEdge{i, j, *k});
    }
  }
  return edges;
}

std::vector<GalleryEdge> gallery_edges_parallel(const std::vector<std::vector<std::string>>& signatures) {
  const auto count = static_cast<std::int64_t>(signatures.size());
  std::vector<std::vector<GalleryEdge>> rows(signatures.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto ii = static_cast<std::size_t>(i);
    for (std::size_t j = ii + 1; j < signatures.size(); ++j) {
      if (auto k = single_difference(signatures[ii], signatures[j])) rows[ii].push_back(GalleryEdge{ii, j, *k});
    }
  }
  std::vector<GalleryEdge> edges;
  for (auto& row : rows) edges.insert(edges.end(), row.begin(), row.end());
  return edges;
}

}  // namespace hyparr::kernels
