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

#include "hyparr/families.hpp"

#include "hyparr/error.hpp"
#include "hyparr/io.hpp"

namespace hyparr {
namespace {

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v[i] = 1;
  return v;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::kParse, what);
}

}  // namespace

PointedArrangement braid(std::size_t n) {
  require(n >= 2 && n <= 9, "braid needs 2 <= n <= 9");
  std::vector<Vector> normals;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v(n, 0);
      v[j] = 1;
      v[i] = -1;
      normals.push_back(std::move(v));
      labels.push_back(std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  const std::size_t count = normals.size();
  return PointedArrangement(build_arrangement(n, std::move(normals), std::move(labels)), SignVector::all_plus(count));
}

PointedArrangement type_b(std::size_t n) {
  require(n >= 2 && n <= 5, "typeB needs 2 <= n <= 5");
  std::vector<Vector> normals;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    normals.push_back(unit(n, i));
    labels.push_back(std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector minus(n, 0);
      minus[j] = 1;
      minus[i] = -1;
      Vector plus(n, 0);
      plus[j] = 1;
      plus[i] = 1;
      normals.push_back(std::move(minus));
      labels.push_back(std::to_string(i + 1) + "-" + std::to_string(j + 1));
      normals.push_back(std::move(plus));
      labels.push_back(std::to_string(i + 1) + "+" + std::to_string(j + 1));
    }
  }
  const std::size_t count = normals.size();
  return PointedArrangement(build_arrangement(n, std::move(normals), std::move(labels)), SignVector::all_plus(count));
}

PointedArrangement figure1() {
  Arrangement a = build_arrangement(2, {{0, 1}, {1, 0}, {1, 1}}, {"1", "2", "3"});
  return PointedArrangement(std::move(a), SignVector::from_string("-++"));
}

namespace {

Arrangement four_planes() {
  return build_arrangement(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}, {"A", "B", "C", "D"});
}

}  // namespace

PointedArrangement figure2() { return PointedArrangement(four_planes(), SignVector::from_string("++++")); }

PointedArrangement figure2_quad() { return PointedArrangement(four_planes(), SignVector::from_string("+---")); }

Arrangement cyclic_generic(std::size_t n, std::size_t d) {
  require(d >= 2 && n >= d && n <= 64, "cyclic-generic needs 2 <= d <= n <= 64");
  std::vector<Vector> normals;
  for (std::size_t t = 1; t <= n; ++t) {
    Vector v;
    Rational power = 1;
    for (std::size_t k = 0; k < d; ++k) {
      v.push_back(power);
      power *= static_cast<unsigned long>(t);
    }
    normals.push_back(std::move(v));
  }
  return build_arrangement(d, std::move(normals));
}

PointedArrangement cyclic_generic_pointed(std::size_t n, std::size_t d) {
  return PointedArrangement(cyclic_generic(n, d), SignVector::all_plus(n));
}

PointedArrangement make_family(const FamilySpec& spec) {
  auto with_c0 = [&](PointedArrangement pa) { return spec.c0 ? PointedArrangement(pa.data(), *spec.c0) : pa; };
  if (spec.name == "braid") return with_c0(braid(spec.n));
  if (spec.name == "typeB") return with_c0(type_b(spec.n));
  if (spec.name == "figure1") return with_c0(figure1());
  if (spec.name == "figure2") return with_c0(figure2());
  if (spec.name == "figure2-quad") return with_c0(figure2_quad());
  if (spec.name == "cyclic-generic") return with_c0(cyclic_generic_pointed(spec.n, spec.d));
  if (spec.name == "from-file") {
    ArrangementFile f = read_arrangement_file(spec.file);
    auto data = std::make_shared<const ArrangementData>(std::move(f.arrangement));
    SignVector c0 = spec.c0 ? *spec.c0 : f.fundamental_chamber ? *f.fundamental_chamber : data->chambers.front().sign;
    return PointedArrangement(std::move(data), c0);
  }
  throw Error(Errc::kUnknownFamily, "unknown family '" + spec.name + "'");
}

std::string family_label(const FamilySpec& spec) {
  if (spec.name == "braid" || spec.name == "typeB") return spec.name + "(" + std::to_string(spec.n) + ")";
  if (spec.name == "cyclic-generic") return spec.name + "(" + std::to_string(spec.n) + "," + std::to_string(spec.d) + ")";
  if (spec.name == "from-file") return spec.file;
  return spec.name;
}

}  // namespace hyparr
