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

#include <algorithm>
#include <functional>
#include <random>

#include "doctest.h"
#include "hyparr/error.hpp"
#include "hyparr/families.hpp"
#include "support.hpp"

using namespace hyparr;
using hyparr::testing::flat_of;
using hyparr::testing::labelled;

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::kParse;
}

std::size_t count_codim(const std::vector<Flat>& flats, std::size_t codim) {
  return static_cast<std::size_t>(std::count_if(flats.begin(), flats.end(), [&](const Flat& x) { return x.codim == codim; }));
}

}  // namespace

TEST_SUITE("arrangement") {
  TEST_CASE("construction and errors") {
    const Arrangement fig1 = build_arrangement(2, {vec({0, 1}), vec({1, 0}), vec({1, 1})}, {});
    CHECK(fig1.size() == 3);
    CHECK(fig1.rank() == 2);
    CHECK(fig1.label(0) == "0");
    CHECK(code_of([] { build_arrangement(2, {vec({1, 0}), vec({2, 0})}, {}); }) == Errc::kDuplicateHyperplane);
    CHECK(code_of([] { build_arrangement(2, {vec({1, 0}), vec({-3, 0})}, {}); }) == Errc::kDuplicateHyperplane);
    CHECK(code_of([] { build_arrangement(2, {vec({0, 0})}, {}); }) == Errc::kZeroNormal);
    CHECK(code_of([] { build_arrangement(2, {vec({1, 0, 0})}, {}); }) == Errc::kLengthMismatch);
    CHECK(code_of([] { build_arrangement(2, {vec({1, 0})}, {"a", "b"}); }) == Errc::kLengthMismatch);
    std::vector<Vector> many;
    for (long t = 1; t <= 65; ++t) many.push_back(vec({1, t}));
    CHECK(code_of([&] { build_arrangement(2, many, {}); }) == Errc::kTooManyHyperplanes);
    // Orientation is kept, entries scaled to primitive integers.
    const Arrangement scaled = build_arrangement(2, {Vector{Rational(-1, 2), Rational(1, 3)}}, {});
    CHECK(scaled.normal(0) == vec({-3, 2}));
  }

  TEST_CASE("figure2 is generic") {
    const Arrangement a = figure2().arrangement();
    for (std::uint64_t m = 0; m < 16; ++m) {
      const HyperplaneSet s(m);
      if (s.size() == 3) CHECK(a.rank_of(s) == 3);
    }
  }

  TEST_CASE("intersection lattice examples") {
    const auto f1 = intersection_lattice(figure1().arrangement());
    CHECK(f1.size() == 5);
    CHECK(count_codim(f1, 0) == 1);
    CHECK(count_codim(f1, 1) == 3);
    CHECK(count_codim(f1, 2) == 1);
    CHECK(count_codim(intersection_lattice(figure2().arrangement()), 2) == 6);
    CHECK(count_codim(intersection_lattice(braid(4).arrangement()), 2) == 7);
    CHECK(count_codim(intersection_lattice(braid(4).arrangement()), 3) == 1);
    CHECK(count_codim(intersection_lattice(type_b(3).arrangement()), 2) == 13);
  }

  TEST_CASE("property: flats are exactly the closed subsets, by brute force") {
    std::mt19937 rng(3);
    std::vector<Arrangement> arrangements{braid(4).arrangement(), type_b(3).arrangement(), figure2().arrangement()};
    for (int i = 0; i < 10; ++i) arrangements.push_back(testing::random_arrangement(rng, 3, 6, 2));
    for (const Arrangement& a : arrangements) {
      // S is closed iff adding any other hyperplane raises the rank.
      std::set<std::uint64_t> closed;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << a.size()); ++m) {
        const HyperplaneSet s(m);
        const std::size_t r = testing::int_rank([&] {
          std::vector<testing::IntRow> rows;
          const auto all = testing::int_normals(a);
          s.for_each([&](std::size_t h) { rows.push_back(all[h]); });
          return rows;
        }());
        bool is_closed = true;
        for (std::size_t h = 0; h < a.size() && is_closed; ++h) {
          if (s.contains(h)) continue;
          HyperplaneSet bigger = s;
          bigger.insert(h);
          is_closed = a.rank_of(bigger) > r;
        }
        if (is_closed) closed.insert(m);
      }
      std::set<std::uint64_t> found;
      for (const Flat& x : intersection_lattice(a)) {
        found.insert(x.contains.bits());
        CHECK(x.codim == a.rank_of(x.contains));
        CHECK(x.basis.size() + x.codim == a.dim());
        CHECK(is_flat(a, x));
      }
      CHECK(found == closed);
    }
  }

  TEST_CASE("localization examples") {
    const Arrangement f2 = figure2().arrangement();
    const Localization ab = localization(f2, flat_of(f2, {"A", "B"}));
    CHECK(ab.arrangement.size() == 2);
    CHECK(ab.to_parent == std::vector<std::size_t>{0, 1});
    CHECK(ab.arrangement.label(1) == "B");
    const Arrangement f1 = figure1().arrangement();
    CHECK(localization(f1, flat_closure(f1, f1.all())).arrangement.size() == 3);
    const Arrangement b4 = braid(4).arrangement();
    const Localization l = localization(b4, flat_of(b4, {"12", "23"}));
    CHECK(l.arrangement.labels() == std::vector<std::string>{"12", "13", "23"});
    Flat bogus;
    bogus.contains = labelled(f2, {"A", "B", "C"});
    CHECK_THROWS_AS(localization(f2, bogus), Error);
  }

  TEST_CASE("restriction examples") {
    const Arrangement f2 = figure2().arrangement();
    const Restriction d = restriction(f2, testing::label_index(f2, "D"));
    CHECK(d.arrangement.dim() == 2);
    CHECK(d.arrangement.size() == 3);
    const Arrangement two = build_arrangement(3, {vec({1, 0, 0}), vec({0, 1, 0})}, {});
    CHECK(restriction(two, 0).arrangement.size() == 1);
    const Arrangement b4 = braid(4).arrangement();
    const Restriction r = restriction(b4, testing::label_index(b4, "12"));
    CHECK(r.arrangement.size() == 3);
    CHECK(r.trace_of[testing::label_index(b4, "13")] == r.trace_of[testing::label_index(b4, "23")]);
    CHECK(r.trace_of[testing::label_index(b4, "14")] == r.trace_of[testing::label_index(b4, "24")]);
    CHECK(r.trace_of[testing::label_index(b4, "34")] != r.trace_of[testing::label_index(b4, "14")]);
    CHECK_FALSE(r.trace_of[testing::label_index(b4, "12")].has_value());
  }

  TEST_CASE("order parsing round trip") {
    const Arrangement f2 = figure2().arrangement();
    const auto order = f2.parse_order("BDCA");
    CHECK(order == std::vector<std::size_t>{1, 3, 2, 0});
    CHECK(f2.format_order(order) == "BDCA");
    const Arrangement b4 = braid(4).arrangement();
    CHECK(b4.format_order(b4.parse_order("12,34,13")) == "12,34,13");
    CHECK_THROWS_AS(f2.parse_order("BXCA"), Error);
  }
}
