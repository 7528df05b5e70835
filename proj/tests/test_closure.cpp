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

#include <random>

#include "doctest.h"
#include "hyparr/closure.hpp"
#include "hyparr/families.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace hyparr;
using hyparr::testing::labelled;

namespace {

// Separation sets seen from c0 for every grid chamber: an oracle for
// separability that never solves a feasibility problem.
std::set<std::uint64_t> grid_separable(const PointedArrangement& pa, long long k) {
  std::set<std::uint64_t> out;
  for (const std::string& w : testing::grid_chambers(pa.arrangement(), k)) {
    out.insert(pa.separation(SignVector::from_string(w)).bits());
  }
  return out;
}

std::vector<PointedArrangement> small_fixtures() {
  return {figure1(), figure2(), figure2_quad(), braid(3), braid(4), type_b(2), cyclic_generic_pointed(4, 3),
          cyclic_generic_pointed(5, 3)};
}

}  // namespace

TEST_SUITE("closure") {
  TEST_CASE("separability examples") {
    const auto f2 = figure2();
    CHECK(is_separable(f2, {})->sign == f2.c0());
    CHECK(is_separable(f2, f2.all())->sign == -f2.c0());
    CHECK_FALSE(is_separable(f2, labelled(f2.arrangement(), {"A", "B", "C"})));
  }

  TEST_CASE("property: separable sets match a grid oracle") {
    for (const PointedArrangement& pa : {figure1(), figure2(), figure2_quad(), braid(3), braid(4), type_b(2)}) {
      const auto grid = grid_separable(pa, 4);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << pa.size()); ++m) {
        CHECK(is_separable(pa, HyperplaneSet(m)).has_value() == (grid.count(m) > 0));
      }
    }
  }

  TEST_CASE("convexity examples") {
    const auto f2 = figure2();
    CHECK(is_convex(f2, {}));
    CHECK(is_convex(f2, f2.all()));
    CHECK_FALSE(is_convex(f2, labelled(f2.arrangement(), {"A", "B", "C"})));
    const auto f1 = figure1();
    const Arrangement& a1 = f1.arrangement();
    // Seen from c0 line 2 lies between lines 1 and 3.
    CHECK_FALSE(is_convex(f1, labelled(a1, {"1", "3"})));
    CHECK(is_convex(f1, labelled(a1, {"1", "2"})));
  }

  TEST_CASE("biclosed counts") {
    CHECK(enumerate_biclosed(figure2(), 1 << 20).size() == 16);
    CHECK(enumerate_biclosed(figure2_quad(), 1 << 20).size() == 16);
    CHECK(enumerate_biclosed(figure1(), 1 << 20).size() == 6);
    const auto b4 = braid(4);
    CHECK(enumerate_biclosed(b4, 1 << 20) == separation_sets(b4));
    CHECK(separation_sets(b4).size() == 24);
    CHECK_THROWS(enumerate_biclosed(b4, 10));
  }

  TEST_CASE("braid biclosed sets are the transitively closed inversion sets") {
    const auto b4 = braid(4);
    const Arrangement& a = b4.arrangement();
    auto idx = [&](int i, int j) { return testing::label_index(a, std::to_string(i) + std::to_string(j)); };
    for (std::uint64_t m = 0; m < 64; ++m) {
      const HyperplaneSet s(m);
      // {i,j},{j,k} in I forces {i,k}; the same for the complement.
      bool closed = true;
      for (int i = 1; i <= 4; ++i) {
        for (int j = i + 1; j <= 4; ++j) {
          for (int k = j + 1; k <= 4; ++k) {
            if (s.contains(idx(i, j)) && s.contains(idx(j, k)) && !s.contains(idx(i, k))) closed = false;
            if (!s.contains(idx(i, j)) && !s.contains(idx(j, k)) && s.contains(idx(i, k))) closed = false;
          }
        }
      }
      CHECK(is_biclosed(b4, s) == closed);
    }
  }

  TEST_CASE("every separation set is biconvex and biclosed") {
    for (const PointedArrangement& pa : small_fixtures()) {
      for (HyperplaneSet s : separation_sets(pa)) {
        CHECK(is_biconvex(pa, s));
        CHECK(is_biclosed(pa, s));
      }
    }
  }

  TEST_CASE("closure examples") {
    const auto f2 = figure2();
    const Arrangement& a = f2.arrangement();
    const HyperplaneSet abc = labelled(a, {"A", "B", "C"});
    CHECK(closure_convex(f2, abc).closure == f2.all());
    CHECK(closure_2(f2, abc).closure == abc);
    CHECK(closure_2(f2, walls(f2, f2.c0())).closure == abc);
    const auto f1 = figure1();
    const ClosureReport r = closure_2(f1, labelled(f1.arrangement(), {"1", "3"}));
    CHECK(r.closure == f1.all());
    REQUIRE(r.forcing_chain.size() == 1);
    CHECK(f1.arrangement().label(r.forcing_chain[0].forced) == "2");
    CHECK(verify_closure_report(f1, r, ClosureKind::kTwo));
    ClosureReport forged = r;
    forged.forcing_chain[0].forced = 0;
    CHECK_FALSE(verify_closure_report(f1, forged, ClosureKind::kTwo));
    const auto doc = nlohmann::json::parse(closure_report_json(f1, r));
    CHECK(doc["closure"] == nlohmann::json({"1", "2", "3"}));
    CHECK(doc["forcing_chain"][0]["forced"] == "2");
  }

  TEST_CASE("property: closure does not depend on the circuit order") {
    std::mt19937 rng(5);
    for (const PointedArrangement& pa : {braid(4), type_b(3), cyclic_generic_pointed(5, 3)}) {
      std::vector<std::size_t> order(pa.reoriented_circuits().size());
      std::iota(order.begin(), order.end(), 0);
      for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(order.begin(), order.end(), rng);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << pa.size()); m += 7) {
          for (ClosureKind kind : {ClosureKind::kTwo, ClosureKind::kConvex}) {
            CHECK(closure(pa, HyperplaneSet(m), kind, &order).closure == closure(pa, HyperplaneSet(m), kind).closure);
          }
        }
      }
    }
  }

  TEST_CASE("property: closure operator axioms and the definitional forms") {
    for (const PointedArrangement& pa : small_fixtures()) {
      const std::uint64_t total = std::uint64_t{1} << pa.size();
      for (std::uint64_t m = 0; m < total; ++m) {
        const HyperplaneSet i(m);
        for (ClosureKind kind : {ClosureKind::kTwo, ClosureKind::kConvex}) {
          const HyperplaneSet c = closure(pa, i, kind).closure;
          CHECK(i.is_subset_of(c));
          CHECK(closure(pa, c, kind).closure == c);
          for (std::size_t h = 0; h < pa.size(); ++h) CHECK(c.is_subset_of(closure(pa, i | HyperplaneSet{h}, kind).closure));
        }
        CHECK(is_convex(pa, i) == is_convex_by_chambers(pa, i));
        CHECK(is_2closed(pa, i) == is_2closed_by_localization(pa, i));
        CHECK(is_separable(pa, i).has_value() == is_separable_by_circuits(pa, i));
        if (is_convex(pa, i)) CHECK(is_2closed(pa, i));
      }
    }
  }

  TEST_CASE("property: in rank 2 biclosed equals separable") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
      const Arrangement a = testing::random_arrangement(rng, 2, 3 + trial % 4, 3);
      const auto chambers = enumerate_chambers(a);
      const PointedArrangement pa(a, chambers[rng() % chambers.size()].sign);
      CHECK(enumerate_biclosed(pa, 1 << 20) == separation_sets(pa));
    }
  }

  TEST_CASE("rotation") {
    const auto f2 = figure2();
    for (const Chamber& c : f2.chambers()) {
      CHECK(rotate_biclosed(f2, {}, c.sign) == f2.separation(c.sign));
      CHECK(rotate_biclosed(f2, HyperplaneSet{1}, f2.c0()) == HyperplaneSet{1});
      const PointedArrangement from_c = f2.rebased(c.sign);
      for (const Chamber& d : f2.chambers()) {
        CHECK(rotate_biclosed(f2, f2.separation(d.sign), c.sign) == from_c.separation(d.sign));
      }
      for (std::uint64_t m = 0; m < 16; ++m) {
        CHECK(is_biclosed(f2, HyperplaneSet(m)) == is_biclosed(from_c, rotate_biclosed(f2, HyperplaneSet(m), c.sign)));
      }
    }
  }

  TEST_CASE("join via 2-closure") {
    const auto f2 = figure2();
    const ChamberPoset p(f2);
    for (const Chamber& c : f2.chambers()) CHECK(join_via_2closure(f2, c.sign, f2.c0())->sign == c.sign);
    const auto atoms = p.upper_covers(p.bottom());
    const auto ab = join_via_2closure(f2, p.chamber(atoms[0]), p.chamber(atoms[1]));
    REQUIRE(ab);
    CHECK(f2.separation(ab->sign) == (p.sep(atoms[0]) | p.sep(atoms[1])));
    CHECK_FALSE(is_separable(f2, closure_2(f2, p.sep(atoms[0]) | p.sep(atoms[1]) | p.sep(atoms[2])).closure));
    const auto b4 = braid(4);
    const ChamberPoset q(b4);
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = 0; j < q.size(); ++j) {
        const auto via = join_via_2closure(b4, q.chamber(i), q.chamber(j));
        REQUIRE(via);
        CHECK(q.index_of(via->sign) == q.join(i, j));
      }
    }
  }

  TEST_CASE("triangle table agrees with the predicates") {
    for (const PointedArrangement& pa : small_fixtures()) {
      const TriangleTable t = triangle_table(pa);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << pa.size()); ++m) {
        CHECK(two_closed_mask(t, m) == is_2closed(pa, HyperplaneSet(m)));
        CHECK(biclosed_mask(t, m) == is_biclosed(pa, HyperplaneSet(m)));
      }
    }
  }
}
