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

#include <optional>
#include <string>
#include <vector>

#include "hyparr/chamber_order.hpp"

namespace hyparr {

// x_i = x_j in Q^n, normals e_j - e_i for i < j in lexicographic order,
// labels "ij" (1-based). c0 is the identity chamber (all +).
PointedArrangement braid(std::size_t n);

// x_i = 0, then for each i < j: x_i = x_j and x_i = -x_j. Normals e_i,
// e_j - e_i, e_j + e_i; c0 contains (1, 2, ..., n), all +.
PointedArrangement type_b(std::size_t n);

// Lines (0,1), (1,0), (1,1) in Q^2, labelled 1, 2, 3. c0 = (-,+,+) is the
// chamber containing (2,-1); seen from there line 2 lies between 1 and 3.
PointedArrangement figure1();

// A=(1,0,0), B=(0,1,0), C=(0,0,1), D=(1,1,1); c0 = (+,+,+,+) is simplicial
// with walls A, B, C.
PointedArrangement figure2();
// Same planes, c0 = (+,-,-,-): a quadrilateral chamber. From here the
// reduced galleries to -c0 number 16, and the gallery graph has the
// BACD / CDBA pair at distance 6.
PointedArrangement figure2_quad();

// Normals (1, t, ..., t^(d-1)) for t = 1..n. c0 = all +.
Arrangement cyclic_generic(std::size_t n, std::size_t d);
PointedArrangement cyclic_generic_pointed(std::size_t n, std::size_t d);

struct FamilySpec {
  std::string name;  // braid, typeB, figure1, figure2, figure2-quad, cyclic-generic, from-file
  std::size_t n = 0;
  std::size_t d = 0;
  std::string file;
  std::optional<SignVector> c0;  // overrides the family's fundamental chamber
};

// Throws kUnknownFamily, kParse for bad parameters, kNotAChamber for a bad c0.
// A file without fundamental_chamber gets the first chamber in canonical order.
PointedArrangement make_family(const FamilySpec& spec);

// Name used in reports, e.g. "braid(4)".
std::string family_label(const FamilySpec& spec);

}  // namespace hyparr
