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

#include "hyparr/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "hyparr/error.hpp"

namespace hyparr {
namespace {

using IntRow = std::vector<Integer>;

IntRow to_integer_row(const Vector& row) {
  Integer scale = 1;
  for (const Rational& q : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const Rational& q : row) out.push_back(q.get_num() * (scale / q.get_den()));
  return out;
}

// Divides by the positive content; returns false for the zero row.
bool make_primitive(IntRow& row) {
  Integer g = 0;
  for (const Integer& v : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g == 0) return false;
  if (g != 1) {
    for (Integer& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
  return true;
}

}  // namespace

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(Errc::kLengthMismatch, "dot product of unequal lengths");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

Vector primitive(const Vector& v) {
  IntRow row = to_integer_row(v);
  make_primitive(row);
  Vector out;
  out.reserve(row.size());
  for (Integer& x : row) out.emplace_back(std::move(x));
  return out;
}

Matrix::Matrix(std::size_t cols, std::vector<Vector> rows) : cols_(cols), rows_(std::move(rows)) {
  for (const Vector& r : rows_) {
    if (r.size() != cols_) throw Error(Errc::kLengthMismatch, "matrix rows of unequal length");
  }
}

Matrix Matrix::identity(std::size_t n) {
  std::vector<Vector> rows(n, Vector(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return Matrix(n, std::move(rows));
}

void Matrix::push_row(Vector row) {
  if (row.size() != cols_) throw Error(Errc::kLengthMismatch, "matrix rows of unequal length");
  rows_.push_back(std::move(row));
}

Matrix Matrix::transpose() const {
  std::vector<Vector> t(cols_, Vector(rows_.size()));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t[j][i] = rows_[i][j];
  }
  return Matrix(rows_.size(), std::move(t));
}

std::size_t rank(std::span<const Vector> rows, std::size_t cols) {
  std::vector<IntRow> a;
  a.reserve(rows.size());
  for (const Vector& r : rows) {
    if (r.size() != cols) throw Error(Errc::kLengthMismatch, "matrix rows of unequal length");
    a.push_back(to_integer_row(r));
  }
  std::size_t r = 0;
  Integer prev = 1;
  Integer t;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::size_t rank(const Matrix& m) { return rank(m.row_vectors(), m.cols()); }

std::vector<Vector> rref(std::vector<Vector> rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][c];
    for (std::size_t j = c; j < cols; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const std::size_t n = m.cols();
  const std::vector<Vector> reduced = rref(m.row_vectors(), n);
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(n, false);
  for (const Vector& row : reduced) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    pivot_of_row.push_back(c);
    is_pivot[c] = true;
  }
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < reduced.size(); ++i) v[pivot_of_row[i]] = -reduced[i][f];
    basis.push_back(std::move(v));
  }
  return rref(std::move(basis), n);
}

bool satisfies(const Vector& x, std::span<const SignConstraint> constraints) {
  for (const SignConstraint& c : constraints) {
    if (sign_of(dot(c.normal, x)) != c.sign) return false;
  }
  return true;
}

std::optional<Vector> strict_feasible(std::span<const SignConstraint> constraints) {
  if (constraints.empty()) return Vector{};
  const std::size_t n = constraints.front().normal.size();

  std::vector<Vector> equalities;
  std::vector<Vector> stricts;
  for (const SignConstraint& c : constraints) {
    if (c.normal.size() != n) throw Error(Errc::kLengthMismatch, "constraint vectors of unequal length");
    if (c.sign == Sign::kZero) {
      equalities.push_back(c.normal);
    } else {
      Vector v = c.normal;
      if (c.sign == Sign::kMinus) {
        for (Rational& q : v) q = -q;
      }
      stricts.push_back(std::move(v));
    }
  }

  // x[var] = <expr, x>, with expr[var] == 0.
  struct Substitution {
    std::size_t var;
    Vector expr;
  };
  std::vector<Substitution> substitutions;
  std::vector<bool> dependent(n, false);
  auto substitute = [](Vector& row, const Substitution& s) {
    if (row[s.var] == 0) return;
    const Rational coef = row[s.var];
    row[s.var] = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (s.expr[j] != 0) row[j] += coef * s.expr[j];
    }
  };
  for (std::size_t e = 0; e < equalities.size(); ++e) {
    const Vector& row = equalities[e];
    std::size_t p = 0;
    while (p < n && row[p] == 0) ++p;
    if (p == n) continue;
    Substitution s{p, Vector(n, 0)};
    for (std::size_t j = 0; j < n; ++j) {
      if (j != p && row[j] != 0) s.expr[j] = -row[j] / row[p];
    }
    for (std::size_t f = e + 1; f < equalities.size(); ++f) substitute(equalities[f], s);
    for (Vector& r : stricts) substitute(r, s);
    dependent[p] = true;
    substitutions.push_back(std::move(s));
  }

  std::vector<std::size_t> free_vars;
  for (std::size_t j = 0; j < n; ++j) {
    if (!dependent[j]) free_vars.push_back(j);
  }

  std::vector<IntRow> current;
  current.reserve(stricts.size());
  for (const Vector& r : stricts) {
    IntRow row = to_integer_row(r);
    if (!make_primitive(row)) return std::nullopt;  // 0 > 0
    current.push_back(std::move(row));
  }
  auto dedupe = [](std::vector<IntRow>& rows) {
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  };
  dedupe(current);

  std::vector<std::vector<IntRow>> levels;
  levels.reserve(free_vars.size());
  for (std::size_t k : free_vars) {
    std::vector<IntRow> next;
    std::vector<const IntRow*> pos;
    std::vector<const IntRow*> neg;
    for (const IntRow& row : current) {
      const int s = sgn(row[k]);
      if (s > 0) pos.push_back(&row);
      else if (s < 0) neg.push_back(&row);
      else next.push_back(row);
    }
    for (const IntRow* p : pos) {
      for (const IntRow* q : neg) {
        const Integer wp = -(*q)[k];
        const Integer wq = (*p)[k];
        IntRow combined(n);
        for (std::size_t j = 0; j < n; ++j) combined[j] = wp * (*p)[j] + wq * (*q)[j];
        if (!make_primitive(combined)) return std::nullopt;
        next.push_back(std::move(combined));
      }
    }
    dedupe(next);
    levels.push_back(std::move(current));
    current = std::move(next);
  }
  assert(current.empty());

  Vector x(n, 0);
  for (std::size_t idx = free_vars.size(); idx-- > 0;) {
    const std::size_t k = free_vars[idx];
    std::optional<Rational> lower;
    std::optional<Rational> upper;
    for (const IntRow& row : levels[idx]) {
      if (row[k] == 0) continue;
      Rational rest = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k && row[j] != 0) rest += Rational(row[j]) * x[j];
      }
      const Rational bound = -rest / Rational(row[k]);
      if (row[k] > 0) {
        if (!lower || bound > *lower) lower = bound;
      } else {
        if (!upper || bound < *upper) upper = bound;
      }
    }
    if (lower && upper) {
      x[k] = (*lower + *upper) / 2;
    } else if (lower) {
      x[k] = *lower + 1;
    } else if (upper) {
      x[k] = *upper - 1;
    }
  }
  for (auto it = substitutions.rbegin(); it != substitutions.rend(); ++it) {
    x[it->var] = dot(it->expr, x);
  }
  assert(satisfies(x, constraints));
  return x;
}

}  // namespace hyparr
