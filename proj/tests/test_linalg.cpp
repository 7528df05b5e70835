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
#include "hyparr/error.hpp"
#include "hyparr/linalg.hpp"
#include "support.hpp"

using namespace hyparr;

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Matrix mat(std::size_t cols, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> out;
  for (auto r : rows) out.push_back(vec(r));
  return Matrix(cols, out);
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(format_rational(Rational(-6, 4)) == "-3/2");
    CHECK(format_rational(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
  }

  TEST_CASE("rank examples") {
    CHECK(rank(Matrix::identity(3)) == 3);
    CHECK(rank(mat(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}})) == 3);
    CHECK(rank(mat(3, {{1, -1, 0}, {0, 1, -1}, {1, 0, -1}})) == 2);
    CHECK(rank(Matrix(4)) == 0);
  }

  TEST_CASE("kernel examples") {
    const auto k0 = kernel_basis(Matrix(3));
    REQUIRE(k0.size() == 3);
    CHECK(k0[0] == vec({1, 0, 0}));
    CHECK(k0[1] == vec({0, 1, 0}));
    CHECK(k0[2] == vec({0, 0, 1}));
    const auto k1 = kernel_basis(mat(3, {{1, 0, 0}, {0, 1, 0}}));
    REQUIRE(k1.size() == 1);
    CHECK(k1[0] == vec({0, 0, 1}));
    const auto k2 = kernel_basis(mat(3, {{1, -1, 0}, {0, 1, -1}, {1, 0, -1}}));
    REQUIRE(k2.size() == 1);
    CHECK(primitive(k2[0]) == vec({1, 1, 1}));
  }

  TEST_CASE("primitive keeps orientation") {
    CHECK(primitive(vec({-2, 4, 0})) == vec({-1, 2, 0}));
    Vector half{Rational(1, 2), Rational(-1, 3)};
    CHECK(primitive(half) == vec({3, -2}));
  }

  TEST_CASE("strict feasibility examples") {
    std::vector<SignConstraint> quad{{vec({1, 0}), Sign::kPlus}, {vec({0, 1}), Sign::kPlus}};
    const auto w = strict_feasible(quad);
    REQUIRE(w);
    CHECK(satisfies(*w, quad));
    std::vector<SignConstraint> clash{{vec({1, 0}), Sign::kPlus}, {vec({-1, 0}), Sign::kPlus}};
    CHECK_FALSE(strict_feasible(clash));
    std::vector<SignConstraint> abcd{{vec({1, 0, 0}), Sign::kMinus},
                                     {vec({0, 1, 0}), Sign::kMinus},
                                     {vec({0, 0, 1}), Sign::kMinus},
                                     {vec({1, 1, 1}), Sign::kPlus}};
    CHECK_FALSE(strict_feasible(abcd));
    std::vector<SignConstraint> on_line{{vec({1, -1, 0}), Sign::kZero}, {vec({0, 0, 1}), Sign::kPlus}, {vec({1, 0, 0}), Sign::kMinus}};
    const auto w2 = strict_feasible(on_line);
    REQUIRE(w2);
    CHECK(satisfies(*w2, on_line));
  }

  TEST_CASE("property: Bareiss rank equals RREF and 64-bit oracle") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> size(0, 5);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t rows = static_cast<std::size_t>(size(rng));
      const std::size_t cols = static_cast<std::size_t>(size(rng)) + 1;
      std::vector<Vector> m;
      std::vector<testing::IntRow> im;
      for (std::size_t i = 0; i < rows; ++i) {
        Vector r;
        testing::IntRow ir;
        for (std::size_t j = 0; j < cols; ++j) {
          const int e = entry(rng);
          r.emplace_back(e);
          ir.push_back(e);
        }
        m.push_back(r);
        im.push_back(ir);
      }
      const std::size_t r = rank(m, cols);
      CHECK(r == rref(m, cols).size());
      CHECK(r == testing::int_rank(im));
      // Rank-nullity, and the kernel really is annihilated.
      const auto k = kernel_basis(Matrix(cols, m));
      CHECK(k.size() + r == cols);
      for (const Vector& v : k) {
        for (const Vector& row : m) CHECK(dot(row, v) == 0);
      }
    }
  }

  TEST_CASE("property: feasibility witnesses satisfy and infeasibility matches a grid search in 2D") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-2, 2);
    std::uniform_int_distribution<int> sign(-1, 1);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<SignConstraint> cons;
      for (int i = 0; i < 3; ++i) {
        cons.push_back({vec({entry(rng), entry(rng)}), static_cast<Sign>(sign(rng))});
      }
      const auto w = strict_feasible(cons);
      if (w) CHECK(satisfies(*w, cons));
      // Cones cut by normals with entries in [-2,2] contain a point of the
      // 13x13 integer grid whenever they are nonempty.
      bool grid = false;
      for (int x = -6; x <= 6 && !grid; ++x) {
        for (int y = -6; y <= 6 && !grid; ++y) grid = satisfies(vec({x, y}), cons);
      }
      CHECK(grid == w.has_value());
    }
  }
}
