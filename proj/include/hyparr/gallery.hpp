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
#include <string>
#include <vector>

#include "hyparr/chamber_order.hpp"

namespace hyparr {

// Saturated chain c = chain[0] < ... < chain[t] = d of P(A, c). order[k] is
// the hyperplane crossed between chain[k] and chain[k+1].
struct Gallery {
  std::vector<SignVector> chain;
  std::vector<std::size_t> order;

  const SignVector& start() const { return chain.front(); }
  const SignVector& end() const { return chain.back(); }
  friend bool operator==(const Gallery& a, const Gallery& b) { return a.chain == b.chain; }
};

// Chain of chambers obtained by crossing `order` from c; nullopt if some
// step leaves the chamber set.
std::optional<Gallery> gallery_from_order(const PointedArrangement& pa, const SignVector& c,
                                          const std::vector<std::size_t>& order);

// All reduced galleries from c to d, sorted lexicographically by order.
// Throws kNotAChamber, kBoundExceeded once more than `bound` are found.
std::vector<Gallery> enumerate_galleries(const PointedArrangement& pa, const SignVector& c, const SignVector& d,
                                         std::uint64_t bound);

// Positions k into pa.l2() of codim-2 flats X with r_X != r'_X.
// Throws kEndpointMismatch.
std::vector<std::size_t> l2_separation(const PointedArrangement& pa, const Gallery& r, const Gallery& r2);

// Literal incidence: some covector x with zero set A_X has x∘c and x∘(-c)
// both in r, where c = r.start().
bool is_gallery_incident(const PointedArrangement& pa, const Gallery& r, const Flat& x);

// Reverse the crossings of A_X between x∘c and x∘(-c); nullopt when r is
// not incident to X.
std::optional<Gallery> flip(const PointedArrangement& pa, const Gallery& r, const Flat& x);

struct GalleryEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t l2 = 0;  // position in pa.l2() of the single separating flat
};

struct GalleryGraph {
  std::vector<Gallery> galleries;
  std::vector<GalleryEdge> edges;  // a < b, sorted
  std::vector<std::vector<std::size_t>> adjacency;
};

// Throws kBoundExceeded through enumerate_galleries.
GalleryGraph build_gallery_graph(const PointedArrangement& pa, const SignVector& c, const SignVector& d,
                                 std::uint64_t bound);
// Same graph with edges from the serial reference scan.
GalleryGraph build_gallery_graph_reference(const PointedArrangement& pa, const SignVector& c, const SignVector& d,
                                           std::uint64_t bound);

// Per gallery and codim-2 flat, the crossing order restricted to A_X.
std::vector<std::vector<std::string>> l2_signatures(const PointedArrangement& pa,
                                                    const std::vector<Gallery>& galleries);

// Unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const GalleryGraph& g, std::size_t source);
// Graph distance from r0 equals |L2(r0, r)| for every r.
bool is_l2_accessible(const PointedArrangement& pa, const GalleryGraph& g, std::size_t r0);
// Largest distance; nullopt if the graph is disconnected.
std::optional<std::size_t> diameter(const GalleryGraph& g);

// For each codim-2 flat, the two crossing orders of A_X from (c0)_X to
// -(c0)_X, computed once from projected chambers.
class AdmissibilityOracle {
 public:
  explicit AdmissibilityOracle(const PointedArrangement& pa);
  // Throws kNotAPermutation.
  bool is_admissible(const std::vector<std::size_t>& order) const;
  const std::vector<std::vector<std::size_t>>& local_orders(std::size_t k) const { return local_[k]; }

 private:
  std::size_t n_ = 0;
  std::vector<HyperplaneSet> keys_;
  std::vector<std::vector<std::vector<std::size_t>>> local_;
};

bool is_admissible(const PointedArrangement& pa, const std::vector<std::size_t>& order);

// Chambers c0 = separated by prefixes of `order`; nullopt if a prefix is not
// separable. Throws kNotAdmissible.
std::optional<Gallery> realize_admissible(const PointedArrangement& pa, const std::vector<std::size_t>& order);

// Reverse the block occupied by A_X when it is contiguous. Throws
// kNotAdmissible.
std::optional<std::vector<std::size_t>> flip_admissible_block(const PointedArrangement& pa,
                                                              const std::vector<std::size_t>& order, const Flat& x);

std::string gallery_graph_dot(const PointedArrangement& pa, const GalleryGraph& g);
std::string gallery_graph_json(const PointedArrangement& pa, const GalleryGraph& g);

}  // namespace hyparr
