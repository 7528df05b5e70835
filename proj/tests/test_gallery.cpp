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

#include <map>

#include "doctest.h"
#include "hyparr/error.hpp"
#include "hyparr/families.hpp"
#include "hyparr/gallery.hpp"
#include "hyparr/kernels.hpp"
#include "support.hpp"

using namespace hyparr;
using hyparr::testing::flat_of;

namespace {

constexpr std::uint64_t kBound = std::uint64_t{1} << 20;

std::vector<Gallery> antipodal(const PointedArrangement& pa) {
  return enumerate_galleries(pa, pa.c0(), -pa.c0(), kBound);
}

const Gallery& by_order(const PointedArrangement& pa, const std::vector<Gallery>& gs, const std::string& text) {
  const auto order = pa.arrangement().parse_order(text);
  for (const Gallery& g : gs) {
    if (g.order == order) return g;
  }
  throw std::runtime_error("no gallery " + text);
}

// Saturated chains counted by dynamic programming over the chamber poset.
std::size_t chain_count(const PointedArrangement& pa) {
  const ChamberPoset p(pa);
  std::vector<std::size_t> idx(p.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return p.rank(x) < p.rank(y); });
  std::vector<std::size_t> ways(p.size(), 0);
  ways[p.bottom()] = 1;
  for (std::size_t i : idx) {
    for (std::size_t j : p.upper_covers(i)) ways[j] += ways[i];
  }
  return ways[p.top()];
}

// Reduced words of the longest element of S_4, counted by a direct search
// over adjacent transpositions.
std::size_t reduced_words_s4() {
  std::size_t count = 0;
  std::function<void(std::vector<int>, int)> go = [&](std::vector<int> w, int left) {
    if (left == 0) {
      count += w == std::vector<int>{4, 3, 2, 1};
      return;
    }
    for (int s = 0; s < 3; ++s) {
      if (w[static_cast<std::size_t>(s)] < w[static_cast<std::size_t>(s) + 1]) {
        std::vector<int> v = w;
        std::swap(v[static_cast<std::size_t>(s)], v[static_cast<std::size_t>(s) + 1]);
        go(v, left - 1);
      }
    }
  };
  go({1, 2, 3, 4}, 6);
  return count;
}

}  // namespace

TEST_SUITE("gallery") {
  TEST_CASE("gallery counts") {
    CHECK(antipodal(braid(3)).size() == 2);
    CHECK(antipodal(type_b(2)).size() == 2);
    CHECK(antipodal(figure2_quad()).size() == 16);
    CHECK(antipodal(braid(4)).size() == 16);
    CHECK(reduced_words_s4() == 16);
    for (const PointedArrangement& pa : {figure2(), figure2_quad(), braid(4), type_b(3), cyclic_generic_pointed(5, 3)}) {
      CHECK(antipodal(pa).size() == chain_count(pa));
    }
    CHECK_THROWS_AS(enumerate_galleries(braid(4), braid(4).c0(), -braid(4).c0(), 5), Error);
  }

  TEST_CASE("galleries are saturated chains") {
    const auto pa = figure2_quad();
    for (const Gallery& g : antipodal(pa)) {
      CHECK(g.start() == pa.c0());
      CHECK(g.end() == -pa.c0());
      CHECK(g.order.size() == pa.size());
      for (std::size_t k = 0; k + 1 < g.chain.size(); ++k) {
        CHECK(separation(g.chain[k], g.chain[k + 1]) == HyperplaneSet{g.order[k]});
      }
      CHECK(gallery_from_order(pa, pa.c0(), g.order) == g);
    }
  }

  TEST_CASE("L2 separation") {
    const auto pa = figure2_quad();
    const auto gs = antipodal(pa);
    for (const Gallery& g : gs) CHECK(l2_separation(pa, g, g).empty());
    CHECK(l2_separation(pa, by_order(pa, gs, "BACD"), by_order(pa, gs, "CDBA")).size() == 4);
    const auto b3 = braid(3);
    const auto two = antipodal(b3);
    CHECK(l2_separation(b3, two[0], two[1]) == std::vector<std::size_t>{0});
    const auto short_one = enumerate_galleries(pa, pa.c0(), pa.chambers()[0].sign, kBound);
    if (!short_one.empty() && pa.chambers()[0].sign != -pa.c0()) {
      CHECK_THROWS_AS(l2_separation(pa, short_one[0], gs[0]), Error);
    }
  }

  TEST_CASE("flips") {
    const auto b3 = braid(3);
    const auto two = antipodal(b3);
    const Flat origin = flat_closure(b3.arrangement(), b3.all());
    CHECK(flip(b3, two[0], origin) == two[1]);
    CHECK(flip(b3, two[1], origin) == two[0]);
    const auto pa = figure2_quad();
    const Arrangement& a = pa.arrangement();
    const auto gs = antipodal(pa);
    const Gallery& bdca = by_order(pa, gs, "BDCA");
    CHECK_FALSE(is_gallery_incident(pa, bdca, flat_of(a, {"C", "D"})));
    CHECK_FALSE(flip(pa, bdca, flat_of(a, {"C", "D"})));
    const auto flipped = flip(pa, by_order(pa, gs, "ABCD"), flat_of(a, {"A", "B"}));
    REQUIRE(flipped);
    CHECK(a.format_order(flipped->order) == "BACD");
  }

  TEST_CASE("gallery graph") {
    const auto pa = figure2_quad();
    const Arrangement& a = pa.arrangement();
    const GalleryGraph g = build_gallery_graph(pa, pa.c0(), -pa.c0(), kBound);
    CHECK(g.galleries.size() == 16);
    const GalleryGraph ref = build_gallery_graph_reference(pa, pa.c0(), -pa.c0(), kBound);
    REQUIRE(ref.edges.size() == g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) CHECK((g.edges[e].a == ref.edges[e].a && g.edges[e].b == ref.edges[e].b));
    std::size_t bacd = 0;
    std::size_t cdba = 0;
    for (std::size_t r = 0; r < g.galleries.size(); ++r) {
      if (a.format_order(g.galleries[r].order) == "BACD") bacd = r;
      if (a.format_order(g.galleries[r].order) == "CDBA") cdba = r;
    }
    CHECK(bfs_distances(g, bacd)[cdba] == 6);
    CHECK(diameter(g) == 6);
    // Every edge is one flip.
    for (const GalleryEdge& e : g.edges) {
      CHECK(flip(pa, g.galleries[e.a], pa.l2_flat(e.l2)) == g.galleries[e.b]);
    }
    const GalleryGraph b3 = build_gallery_graph(braid(3), braid(3).c0(), -braid(3).c0(), kBound);
    CHECK(b3.galleries.size() == 2);
    CHECK(b3.edges.size() == 1);
    CHECK(diameter(b3) == 1);
    const GalleryGraph b4 = build_gallery_graph(braid(4), braid(4).c0(), -braid(4).c0(), kBound);
    CHECK(diameter(b4) == 7);
    const auto dot = gallery_graph_dot(pa, g);
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("BACD") != std::string::npos);
  }

  TEST_CASE("admissible orders") {
    const auto quad = figure2_quad();
    const Arrangement& a = quad.arrangement();
    std::vector<std::size_t> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t admissible = 0;
    std::size_t realized = 0;
    do {
      admissible += is_admissible(quad, perm);
      realized += realize_admissible(quad, perm).has_value();
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(admissible == 24);
    CHECK(realized == 16);
    CHECK_FALSE(realize_admissible(quad, a.parse_order("BCDA")));
    const auto block = flip_admissible_block(quad, a.parse_order("BDCA"), flat_of(a, {"C", "D"}));
    REQUIRE(block);
    CHECK(a.format_order(*block) == "BCDA");
    CHECK(is_admissible(quad, *block));
    CHECK_FALSE(flip_admissible_block(quad, a.parse_order("ACBD"), flat_of(a, {"A", "B"})));
    CHECK_THROWS_AS(is_admissible(quad, {0, 0, 1, 2}), Error);

    const auto b3 = braid(3);
    const auto whole = flip_admissible_block(b3, {0, 1, 2}, flat_closure(b3.arrangement(), b3.all()));
    REQUIRE(whole);
    CHECK(*whole == std::vector<std::size_t>{2, 1, 0});

    const auto b4 = braid(4);
    const auto bad = b4.arrangement().parse_order("12,34,13,24,14,23");
    CHECK_FALSE(is_admissible(b4, bad));
    for (const Gallery& g : antipodal(b4)) {
      CHECK(is_admissible(b4, g.order));
      CHECK(realize_admissible(b4, g.order) == g);
    }
  }

  TEST_CASE("admissibility oracle matches a localization brute force") {
    for (const PointedArrangement& pa : {figure2_quad(), braid(4), cyclic_generic_pointed(5, 3)}) {
      // Per codim-2 flat, the orders in which the galleries of the
      // localization cross A_X.
      std::vector<std::set<std::vector<std::size_t>>> local(pa.l2().size());
      for (std::size_t k = 0; k < pa.l2().size(); ++k) {
        const Flat& x = pa.l2_flat(k);
        for (const Gallery& g : antipodal(pa)) {
          std::vector<std::size_t> restricted;
          for (std::size_t h : g.order) {
            if (x.contains.contains(h)) restricted.push_back(h);
          }
          local[k].insert(restricted);
        }
      }
      std::vector<std::size_t> perm(pa.size());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        bool ok = true;
        for (std::size_t k = 0; k < pa.l2().size() && ok; ++k) {
          std::vector<std::size_t> restricted;
          for (std::size_t h : perm) {
            if (pa.l2_flat(k).contains.contains(h)) restricted.push_back(h);
          }
          ok = local[k].count(restricted) > 0;
        }
        CHECK(is_admissible(pa, perm) == ok);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}
