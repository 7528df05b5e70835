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

#include "hyparr/gallery.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <sstream>

#include "hyparr/error.hpp"
#include "hyparr/kernels.hpp"
#include "json.hpp"

namespace hyparr {
namespace {

void require_chamber(const PointedArrangement& pa, const SignVector& c) {
  if (!pa.is_chamber(c)) throw Error(Errc::kNotAChamber, "'" + c.to_string() + "' is not a chamber");
}

void require_permutation(std::size_t n, const std::vector<std::size_t>& order) {
  std::vector<bool> seen(n, false);
  bool ok = order.size() == n;
  for (std::size_t h : order) {
    if (!ok) break;
    ok = h < n && !seen[h];
    if (ok) seen[h] = true;
  }
  if (!ok) throw Error(Errc::kNotAPermutation, "order is not a permutation of the " + std::to_string(n) + " hyperplanes");
}

std::string restricted(const std::vector<std::size_t>& order, HyperplaneSet key) {
  std::string out;
  for (std::size_t h : order) {
    if (key.contains(h)) out.push_back(static_cast<char>(h));
  }
  return out;
}

}  // namespace

std::optional<Gallery> gallery_from_order(const PointedArrangement& pa, const SignVector& c,
                                          const std::vector<std::size_t>& order) {
  Gallery g{{c}, order};
  HyperplaneSet crossed;
  for (std::size_t h : order) {
    if (h >= pa.size() || crossed.contains(h)) return std::nullopt;
    crossed.insert(h);
    SignVector next = g.chain.back().flipped(HyperplaneSet{h});
    if (!pa.is_chamber(next)) return std::nullopt;
    g.chain.push_back(std::move(next));
  }
  return g;
}

std::vector<Gallery> enumerate_galleries(const PointedArrangement& pa, const SignVector& c, const SignVector& d,
                                         std::uint64_t bound) {
  require_chamber(pa, c);
  require_chamber(pa, d);
  const HyperplaneSet target = separation(c, d);
  std::vector<Gallery> out;
  Gallery current{{c}, {}};
  // Depth first, smallest hyperplane first, so orders come out sorted.
  auto visit = [&](auto&& self) -> void {
    if (current.chain.back() == d) {
      if (out.size() >= bound) {
        throw Error(Errc::kBoundExceeded, "more than " + std::to_string(bound) + " galleries (--bound)");
      }
      out.push_back(current);
      return;
    }
    const HyperplaneSet remaining = target - separation(c, current.chain.back());
    for (std::size_t h : remaining.indices()) {
      SignVector next = current.chain.back().flipped(HyperplaneSet{h});
      if (!pa.is_chamber(next)) continue;
      current.chain.push_back(std::move(next));
      current.order.push_back(h);
      self(self);
      current.chain.pop_back();
      current.order.pop_back();
    }
  };
  visit(visit);
  return out;
}

std::vector<std::size_t> l2_separation(const PointedArrangement& pa, const Gallery& r, const Gallery& r2) {
  if (r.start() != r2.start() || r.end() != r2.end()) {
    throw Error(Errc::kEndpointMismatch, "galleries have different endpoints");
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < pa.l2().size(); ++k) {
    const HyperplaneSet key = pa.l2_flat(k).contains;
    if (restricted(r.order, key) != restricted(r2.order, key)) out.push_back(k);
  }
  return out;
}

namespace {

// Positions (i, j) in r.chain of x∘c and x∘(-c), if r is incident to X.
std::optional<std::pair<std::size_t, std::size_t>> incidence_span(const PointedArrangement& pa, const Gallery& r,
                                                                  const Flat& x) {
  const SignVector& c = r.start();
  const SignVector anti = -c;
  for (std::size_t i = 0; i < r.chain.size(); ++i) {
    const SignVector face = r.chain[i].with_zeros(x.contains);
    if (compose(face, c) != r.chain[i]) continue;
    if (!is_covector(pa.table(), pa.chambers(), face)) continue;
    const SignVector far = compose(face, anti);
    for (std::size_t j = i; j < r.chain.size(); ++j) {
      if (r.chain[j] == far) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_gallery_incident(const PointedArrangement& pa, const Gallery& r, const Flat& x) {
  return incidence_span(pa, r, x).has_value();
}

std::optional<Gallery> flip(const PointedArrangement& pa, const Gallery& r, const Flat& x) {
  const auto span = incidence_span(pa, r, x);
  if (!span) return std::nullopt;
  std::vector<std::size_t> order = r.order;
  std::reverse(order.begin() + static_cast<std::ptrdiff_t>(span->first),
               order.begin() + static_cast<std::ptrdiff_t>(span->second));
  return gallery_from_order(pa, r.start(), order);
}

std::vector<std::vector<std::string>> l2_signatures(const PointedArrangement& pa,
                                                    const std::vector<Gallery>& galleries) {
  std::vector<std::vector<std::string>> out;
  out.reserve(galleries.size());
  for (const Gallery& g : galleries) {
    std::vector<std::string> row;
    for (std::size_t k = 0; k < pa.l2().size(); ++k) row.push_back(restricted(g.order, pa.l2_flat(k).contains));
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

GalleryGraph assemble(std::vector<Gallery> galleries, std::vector<GalleryEdge> edges) {
  GalleryGraph g;
  g.galleries = std::move(galleries);
  g.edges = std::move(edges);
  std::sort(g.edges.begin(), g.edges.end(),
            [](const GalleryEdge& x, const GalleryEdge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  g.adjacency.resize(g.galleries.size());
  for (const GalleryEdge& e : g.edges) {
    g.adjacency[e.a].push_back(e.b);
    g.adjacency[e.b].push_back(e.a);
  }
  for (auto& list : g.adjacency) std::sort(list.begin(), list.end());
  return g;
}

}  // namespace

GalleryGraph build_gallery_graph(const PointedArrangement& pa, const SignVector& c, const SignVector& d,
                                 std::uint64_t bound) {
  std::vector<Gallery> galleries = enumerate_galleries(pa, c, d, bound);
  std::vector<GalleryEdge> edges = kernels::gallery_edges_parallel(l2_signatures(pa, galleries));
  return assemble(std::move(galleries), std::move(edges));
}

GalleryGraph build_gallery_graph_reference(const PointedArrangement& pa, const SignVector& c, const SignVector& d,
                                           std::uint64_t bound) {
  std::vector<Gallery> galleries = enumerate_galleries(pa, c, d, bound);
  std::vector<GalleryEdge> edges = kernels::gallery_edges_reference(l2_signatures(pa, galleries));
  return assemble(std::move(galleries), std::move(edges));
}

std::vector<std::size_t> bfs_distances(const GalleryGraph& g, std::size_t source) {
  constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.galleries.size(), kUnreached);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : g.adjacency[v]) {
      if (dist[w] != kUnreached) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

bool is_l2_accessible(const PointedArrangement& pa, const GalleryGraph& g, std::size_t r0) {
  const std::vector<std::size_t> dist = bfs_distances(g, r0);
  for (std::size_t r = 0; r < g.galleries.size(); ++r) {
    if (dist[r] != l2_separation(pa, g.galleries[r0], g.galleries[r]).size()) return false;
  }
  return true;
}

std::optional<std::size_t> diameter(const GalleryGraph& g) {
  std::size_t best = 0;
  for (std::size_t s = 0; s < g.galleries.size(); ++s) {
    for (std::size_t d : bfs_distances(g, s)) {
      if (d == std::numeric_limits<std::size_t>::max()) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

AdmissibilityOracle::AdmissibilityOracle(const PointedArrangement& pa) : n_(pa.size()) {
  std::vector<HyperplaneSet> seps;
  for (const Chamber& c : pa.chambers()) seps.push_back(pa.separation(c.sign));
  for (std::size_t k = 0; k < pa.l2().size(); ++k) {
    const HyperplaneSet key = pa.l2_flat(k).contains;
    std::set<std::uint64_t> local;  // separation sets of chambers of A_X
    for (HyperplaneSet s : seps) local.insert((s & key).bits());
    std::vector<std::vector<std::size_t>> orders;
    std::vector<std::size_t> prefix;
    auto extend = [&](auto&& self, HyperplaneSet crossed) -> void {
      if (crossed == key) {
        orders.push_back(prefix);
        return;
      }
      for (std::size_t h : (key - crossed).indices()) {
        HyperplaneSet next = crossed;
        next.insert(h);
        if (!local.count(next.bits())) continue;
        prefix.push_back(h);
        self(self, next);
        prefix.pop_back();
      }
    };
    extend(extend, HyperplaneSet{});
    keys_.push_back(key);
    local_.push_back(std::move(orders));
  }
}

bool AdmissibilityOracle::is_admissible(const std::vector<std::size_t>& order) const {
  require_permutation(n_, order);
  for (std::size_t k = 0; k < keys_.size(); ++k) {
    std::vector<std::size_t> mine;
    for (std::size_t h : order) {
      if (keys_[k].contains(h)) mine.push_back(h);
    }
    if (std::find(local_[k].begin(), local_[k].end(), mine) == local_[k].end()) return false;
  }
  return true;
}

bool is_admissible(const PointedArrangement& pa, const std::vector<std::size_t>& order) {
  return AdmissibilityOracle(pa).is_admissible(order);
}

std::optional<Gallery> realize_admissible(const PointedArrangement& pa, const std::vector<std::size_t>& order) {
  if (!is_admissible(pa, order)) throw Error(Errc::kNotAdmissible, "order is not admissible");
  Gallery g{{pa.c0()}, order};
  HyperplaneSet prefix;
  for (std::size_t h : order) {
    prefix.insert(h);
    SignVector next = pa.word_for(prefix);
    if (!pa.is_chamber(next)) return std::nullopt;
    g.chain.push_back(std::move(next));
  }
  return g;
}

std::optional<std::vector<std::size_t>> flip_admissible_block(const PointedArrangement& pa,
                                                              const std::vector<std::size_t>& order, const Flat& x) {
  if (!is_admissible(pa, order)) throw Error(Errc::kNotAdmissible, "order is not admissible");
  std::vector<std::size_t> positions;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (x.contains.contains(order[k])) positions.push_back(k);
  }
  if (positions.empty() || positions.back() - positions.front() + 1 != positions.size()) return std::nullopt;
  std::vector<std::size_t> out = order;
  std::reverse(out.begin() + static_cast<std::ptrdiff_t>(positions.front()),
               out.begin() + static_cast<std::ptrdiff_t>(positions.back() + 1));
  return out;
}

std::string gallery_graph_dot(const PointedArrangement& pa, const GalleryGraph& g) {
  const Arrangement& a = pa.arrangement();
  std::ostringstream out;
  out << "graph galleries {\n";
  for (std::size_t i = 0; i < g.galleries.size(); ++i) {
    out << "  g" << i << " [label=\"" << a.format_order(g.galleries[i].order) << "\"];\n";
  }
  for (const GalleryEdge& e : g.edges) {
    out << "  g" << e.a << " -- g" << e.b << " [label=\"" << a.format_set(pa.l2_flat(e.l2).contains) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string gallery_graph_json(const PointedArrangement& pa, const GalleryGraph& g) {
  const Arrangement& a = pa.arrangement();
  nlohmann::json doc;
  doc["galleries"] = nlohmann::json::array();
  for (const Gallery& r : g.galleries) doc["galleries"].push_back(a.format_order(r.order));
  doc["edges"] = nlohmann::json::array();
  for (const GalleryEdge& e : g.edges) {
    doc["edges"].push_back({{"a", e.a}, {"b", e.b}, {"flat", a.format_set(pa.l2_flat(e.l2).contains)}});
  }
  return doc.dump();
}

}  // namespace hyparr
