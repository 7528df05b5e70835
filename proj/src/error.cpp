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

#include "hyparr/error.hpp"

namespace hyparr {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::kParse: return "ParseError";
    case Errc::kLengthMismatch: return "LengthMismatch";
    case Errc::kZeroNormal: return "ZeroNormal";
    case Errc::kDuplicateHyperplane: return "DuplicateHyperplane";
    case Errc::kTooManyHyperplanes: return "TooManyHyperplanes";
    case Errc::kNotAFlat: return "NotAFlat";
    case Errc::kNotAChamber: return "NotAChamber";
    case Errc::kBoundExceeded: return "BoundExceeded";
    case Errc::kEndpointMismatch: return "EndpointMismatch";
    case Errc::kNotAPermutation: return "NotAPermutation";
    case Errc::kNotAdmissible: return "NotAdmissible";
    case Errc::kNotModular: return "NotModular";
    case Errc::kNotIncident: return "NotIncident";
    case Errc::kNotAChain: return "NotAChain";
    case Errc::kUnknownSelector: return "UnknownSelector";
    case Errc::kUnknownFamily: return "UnknownFamily";
  }
  return "Error";
}

}  // namespace hyparr
