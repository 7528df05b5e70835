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
#include "hyparr/families.hpp"
#include "hyparr/kernels.hpp"
#include "hyparr/oriented_matroid.hpp"
#include "support.hpp"

using namespace hyparr;

namespace {

SignVector sv(const char* w) { return SignVector::from_string(w); }

}  // namespace

TEST_SUITE("oriented-matroid") {
  TEST_CASE("sign vectors") {
    CHECK(compose(sv("000"), sv("-++")) == sv("-++"));
    CHECK(compose(sv("+0-"), sv("+0-")) == sv("+0-"));
    CHECK(compose(sv("+0-"), sv("-++")) == sv("++-"));
    CHECK(separation(sv("+-0+"), sv("-+-+")) == HyperplaneSet{0, 1});
    CHECK(sv("+-0").to_string() == "+-0");
    CHECK(-sv("+-0") == sv("-+0"));
    CHECK(sv("+0-").conforms_to(sv("++-")));
    CHECK_FALSE(sv("+0-").conforms_to(sv("-+-")));
    // Canonical order is + < - < 0 position by position.
    CHECK(sv("+-") < sv("-+"));
    CHECK(sv("-+") < sv("0+"));
    CHECK_THROWS(sv("+x"));
    CHECK_THROWS(compose(sv("+"), sv("++")));
  }

  TEST_CASE("chamber counts") {
    CHECK(figure1().chambers().size() == 6);
    CHECK(figure2().chambers().size() == 14);
    CHECK(braid(4).chambers().size() == 24);
    CHECK(braid(2).chambers().size() == 2);
    CHECK(type_b(2).chambers().size() == 8);
    CHECK(type_b(3).chambers().size() == 48);
    CHECK(enumerate_chambers(cyclic_generic(4, 3)).size() == 14);
    CHECK(enumerate_chambers(cyclic_generic(5, 3)).size() == 22);
    CHECK(enumerate_chambers(cyclic_generic(3, 3)).size() == 8);
    CHECK(enumerate_chambers(cyclic_generic(4, 4)).size() == 16);
  }

  TEST_CASE("chambers agree with a grid search and Whitney's formula") {
    for (const PointedArrangement& pa : {figure1(), figure2(), type_b(2), braid(3), braid(4)}) {
      CHECK(testing::words(pa.chambers()) == testing::grid_chambers(pa.arrangement(), 4));
      CHECK(static_cast<long long>(pa.chambers().size()) == testing::whitney_chamber_count(pa.arrangement()));
    }
  }

  TEST_CASE("property: random arrangements, three chamber oracles agree") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t dim = trial % 2 == 0 ? 3 : 2;
      const std::size_t n = dim == 2 ? 4 : 5 + trial % 3;
      const Arrangement a = testing::random_arrangement(rng, dim, n, 2);
      const auto chambers = enumerate_chambers(a);
      CHECK(static_cast<long long>(chambers.size()) == testing::whitney_chamber_count(a));
      std::set<std::string> scan;
      for (const SignVector& w : kernels::sign_pattern_scan_reference(a)) {
        if (w.is_full()) scan.insert(w.to_string());
      }
      CHECK(testing::words(chambers) == scan);
      for (const Chamber& c : chambers) CHECK(satisfies(c.witness, sign_constraints(a, c.sign)));
    }
  }

  TEST_CASE("circuit examples") {
    const auto f2 = figure2();
    REQUIRE(f2.circuits().size() == 1);
    CHECK(f2.circuits()[0].support() == f2.all());
    CHECK(f2.circuits()[0].sign == sv("+++-"));
    const auto f1 = figure1();
    REQUIRE(f1.circuits().size() == 1);
    CHECK(f1.circuits()[0].sign == sv("++-"));
    const Arrangement two = build_arrangement(2, {Vector{1, 0}, Vector{0, 1}}, {});
    CHECK(enumerate_circuits(two).empty());
    CHECK(braid(4).circuits().size() == 7);
  }

  TEST_CASE("circuits are dependencies with minimal support") {
    for (const PointedArrangement& pa : {figure2(), braid(4), type_b(3)}) {
      const Arrangement& a = pa.arrangement();
      for (const Circuit& c : pa.circuits()) {
        Vector sum(a.dim(), 0);
        for (std::size_t h = 0; h < a.size(); ++h) {
          for (std::size_t j = 0; j < a.dim(); ++j) sum[j] += c.coeffs[h] * a.normal(h)[j];
        }
        CHECK(is_zero(sum));
        CHECK(a.rank_of(c.support()) + 1 == c.support().size());
        c.support().for_each([&](std::size_t h) {
          HyperplaneSet smaller = c.support();
          smaller.erase(h);
          CHECK(a.rank_of(smaller) == smaller.size());
        });
      }
    }
  }

  TEST_CASE("covector tests") {
    const auto f2 = figure2();
    for (const Chamber& c : f2.chambers()) CHECK(is_covector(f2.table(), f2.chambers(), c.sign));
    CHECK(is_covector(f2.table(), f2.chambers(), sv("0000")));
    // A nonzero word vanishing on three generic planes cannot be a covector.
    CHECK_FALSE(is_covector(f2.table(), f2.chambers(), sv("000+")));
    CHECK_FALSE(realize(f2.arrangement(), sv("000+")).has_value());
    CHECK(is_covector(f2.table(), f2.chambers(), sv("00+0")) == false);
    CHECK(is_covector(f2.table(), f2.chambers(), sv("00++")));
  }

  TEST_CASE("covectors with a given zero set") {
    const auto f1 = figure1();
    const Arrangement& a1 = f1.arrangement();
    CHECK(covectors_with_zero_set(a1, f1.chambers(), flat_closure(a1, {})).size() == 6);
    CHECK(covectors_with_zero_set(a1, f1.chambers(), flat_closure(a1, HyperplaneSet{0})).size() == 2);
    const auto f2 = figure2();
    const Arrangement& a2 = f2.arrangement();
    // A∩B is a line; C and D cut it in the same point, leaving two rays.
    const auto ab = covectors_with_zero_set(a2, f2.chambers(), testing::flat_of(a2, {"A", "B"}));
    CHECK(ab.size() == 2);
    CHECK(testing::grid_chambers(restriction(a2, testing::flat_of(a2, {"A", "B"})).arrangement, 3).size() == 2);
    for (const Covector& x : ab) CHECK(x.sign.zero_set() == testing::labelled(a2, {"A", "B"}));
    CHECK(covectors_with_zero_set(a2, f2.chambers(), flat_closure(a2, a2.all())).size() == 1);
  }

  TEST_CASE("property: covector count matches faces of restrictions") {
    for (const PointedArrangement& pa : {figure1(), figure2(), braid(4), type_b(3)}) {
      const Arrangement& a = pa.arrangement();
      std::size_t faces = 0;
      for (const Flat& x : pa.flats()) {
        faces += static_cast<std::size_t>(testing::whitney_chamber_count(restriction(a, x).arrangement));
      }
      CHECK(enumerate_covectors(a, pa.chambers(), pa.flats()).size() == faces);
    }
  }
}
