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
#include <optional>
#include <vector>

#include "hyparr/chamber_order.hpp"
#include "hyparr/closure.hpp"
#include "hyparr/gallery.hpp"

// Exhaustive scans in two flavours: a plain serial loop kept as the
// reference, and an OpenMP version used by the library. Both return the
// same canonical order.
namespace hyparr::kernels {

// Every sign word in {+,-,0}^N that is realizable, sorted. 3^N solves.
std::vector<SignVector> sign_pattern_scan_reference(const Arrangement& a);
std::vector<SignVector> sign_pattern_scan_parallel(const Arrangement& a);

// Subsets (as masks) that are biclosed for the triangle table, ascending mask order.
std::vector<std::uint64_t> biclosed_scan_reference(const TriangleTable& t, std::size_t n);
std::vector<std::uint64_t> biclosed_scan_parallel(const TriangleTable& t, std::size_t n);

// Row-major |T|x|T| table of join_via_2closure as chamber indices.
std::vector<std::optional<std::size_t>> closure_join_table_reference(const PointedArrangement& pa);
std::vector<std::optional<std::size_t>> closure_join_table_parallel(const PointedArrangement& pa);

}  // namespace hyparr::kernels

namespace hyparr::kernels {

// Pairs of galleries whose L2 signatures differ in exactly one flat.
std::vector<GalleryEdge> gallery_edges_reference(const std::vector<std::vector<std::string>>& signatures);
std::vector<GalleryEdge> gallery_edges_parallel(const std::vector<std::vector<std::string>>& signatures);

}  // namespace hyparr::kernels
