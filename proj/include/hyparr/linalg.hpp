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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hyparr/rational.hpp"
#include "hyparr/sign.hpp"

namespace hyparr {

using Vector = std::vector<Rational>;

Rational dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);

// Positive multiple of v with coprime integer entries. Orientation is kept.
Vector primitive(const Vector& v);

// Rectangular matrix of rationals, stored by rows. A matrix with zero rows
// still knows its column count.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t cols) : cols_(cols) {}
  Matrix(std::size_t cols, std::vector<Vector> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Vector& row(std::size_t i) const { return rows_[i]; }
  const std::vector<Vector>& row_vectors() const { return rows_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  void push_row(Vector row);
  Matrix transpose() const;

 private:
  std::size_t cols_ = 0;
  std::vector<Vector> rows_;
};

// Exact rank by fraction-free (Bareiss) elimination over the integers.
std::size_t rank(const Matrix& m);
std::size_t rank(std::span<const Vector> rows, std::size_t cols);

// Reduced row echelon form (Gauss-Jordan over Q), zero rows dropped.
std::vector<Vector> rref(std::vector<Vector> rows, std::size_t cols);

// Basis of {x : m x = 0}, returned as the reduced row echelon form of the
// null space so equal subspaces always give identical output.
std::vector<Vector> kernel_basis(const Matrix& m);

struct SignConstraint {
  Vector normal;
  Sign sign;
};

// Finds x with sign(<normal, x>) == sign for every constraint (strict for
// +/-, equality for 0). Equalities are substituted away first, then the strict
// homogeneous system is decided by Fourier-Motzkin elimination and a witness
// is recovered by back-substitution. Deterministic in the input order.
std::optional<Vector> strict_feasible(std::span<const SignConstraint> constraints);

bool satisfies(const Vector& x, std::span<const SignConstraint> constraints);

}  // namespace hyparr
