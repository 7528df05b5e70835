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

#include "hyparr/closure.hpp"

#include <algorithm>
#include <numeric>

#include "hyparr/error.hpp"
#include "hyparr/kernels.hpp"
#include "json.hpp"

namespace hyparr {
namespace {

// Circuit orientation w has w+ ⊆ I and w- disjoint from I.
bool sits_across(const SignVector& w, HyperplaneSet i) {
  return w.positive().is_subset_of(i) && !w.negative().intersects(i);
}

}  // namespace

std::optional<Chamber> is_separable(const PointedArrangement& pa, HyperplaneSet i) {
  auto co = realize(pa.arrangement(), pa.word_for(i));
  if (!co) return std::nullopt;
  return Chamber{co->sign, std::move(co->witness)};
}

bool is_separable_by_circuits(const PointedArrangement& pa, HyperplaneSet i) {
  for (const SignVector& v : pa.reoriented_circuits()) {
    if (sits_across(v, i) || sits_across(-v, i)) return false;
  }
  return true;
}

bool is_convex(const PointedArrangement& pa, HyperplaneSet i) {
  for (const SignVector& v : pa.reoriented_circuits()) {
    for (const SignVector& w : {v, -v}) {
      if (w.negative().size() == 1 && sits_across(w, i)) return false;
    }
  }
  return true;
}

bool is_convex_by_chambers(const PointedArrangement& pa, HyperplaneSet i) {
  std::vector<HyperplaneSet> seps;
  for (const Chamber& c : pa.chambers()) seps.push_back(pa.separation(c.sign));
  const HyperplaneSet outside = pa.all() - i;
  for (std::size_t h : outside.indices()) {
    const bool found =
        std::any_of(seps.begin(), seps.end(), [&](HyperplaneSet s) { return s.contains(h) && !s.intersects(i); });
    if (!found) return false;
  }
  return true;
}

bool is_2closed(const PointedArrangement& pa, HyperplaneSet i) {
  for (const SignVector& v : pa.reoriented_circuits()) {
    if (v.support().size() != 3) continue;
    for (const SignVector& w : {v, -v}) {
      if (w.negative().size() == 1 && sits_across(w, i)) return false;
    }
  }
  return true;
}

bool is_2closed_by_localization(const PointedArrangement& pa, HyperplaneSet i) {
  for (std::size_t k = 0; k < pa.l2().size(); ++k) {
    const HyperplaneSet local = pa.l2_flat(k).contains;
    // Chambers of A_X, as separation sets from (c0)_X.
    std::vector<HyperplaneSet> seps;
    for (const Chamber& c : pa.chambers()) seps.push_back(pa.separation(c.sign) & local);
    const HyperplaneSet mine = i & local;
    for (std::size_t h : (local - mine).indices()) {
      const bool found =
          std::any_of(seps.begin(), seps.end(), [&](HyperplaneSet s) { return s.contains(h) && !s.intersects(mine); });
      if (!found) return false;
    }
  }
  return true;
}

bool is_biclosed(const PointedArrangement& pa, HyperplaneSet i) {
  return is_2closed(pa, i) && is_2closed(pa, pa.all() - i);
}

bool is_biconvex(const PointedArrangement& pa, HyperplaneSet i) {
  return is_convex(pa, i) && is_convex(pa, pa.all() - i);
}

ClosureReport closure(const PointedArrangement& pa, HyperplaneSet i, ClosureKind kind,
                      const std::vector<std::size_t>* order) {
  const std::vector<SignVector>& circuits = pa.reoriented_circuits();
  std::vector<std::size_t> canonical;
  if (order == nullptr) {
    canonical.resize(circuits.size());
    std::iota(canonical.begin(), canonical.end(), 0);
    order = &canonical;
  }
  ClosureReport report{i, i, {}};
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t idx : *order) {
      const SignVector& v = circuits[idx];
      if (kind == ClosureKind::kTwo && v.support().size() != 3) continue;
      for (const SignVector& w : {v, -v}) {
        if (w.negative().size() != 1 || !sits_across(w, report.closure)) continue;
        const std::size_t forced = w.negative().front();
        report.closure.insert(forced);
        report.forcing_chain.push_back(ForcingStep{w, forced});
        changed = true;
      }
    }
  }
  return report;
}

bool verify_closure_report(const PointedArrangement& pa, const ClosureReport& report, ClosureKind kind) {
  const auto& circuits = pa.reoriented_circuits();
  HyperplaneSet current = report.input;
  for (const ForcingStep& step : report.forcing_chain) {
    const bool known = std::any_of(circuits.begin(), circuits.end(),
                                   [&](const SignVector& v) { return v == step.circuit || -v == step.circuit; });
    if (!known) return false;
    if (kind == ClosureKind::kTwo && step.circuit.support().size() != 3) return false;
    if (step.circuit.negative() != HyperplaneSet{step.forced}) return false;
    if (!step.circuit.positive().is_subset_of(current) || current.contains(step.forced)) return false;
    current.insert(step.forced);
  }
  if (current != report.closure) return false;
  return kind == ClosureKind::kTwo ? is_2closed(pa, current) : is_convex(pa, current);
}

std::string closure_report_json(const PointedArrangement& pa, const ClosureReport& report) {
  const Arrangement& a = pa.arrangement();
  auto labels = [&](HyperplaneSet s) {
    nlohmann::json out = nlohmann::json::array();
    s.for_each([&](std::size_t h) { out.push_back(a.label(h)); });
    return out;
  };
  nlohmann::json doc;
  doc["input"] = labels(report.input);
  doc["closure"] = labels(report.closure);
  doc["forcing_chain"] = nlohmann::json::array();
  for (const ForcingStep& step : report.forcing_chain) {
    doc["forcing_chain"].push_back({{"circuit_support", labels(step.circuit.support())},
                                    {"circuit_signs", step.circuit.to_string()},
                                    {"forced", a.label(step.forced)}});
  }
  return doc.dump();
}

TriangleTable triangle_table(const PointedArrangement& pa) {
  TriangleTable t;
  t.all = pa.all().bits();
  for (const SignVector& v : pa.reoriented_circuits()) {
    if (v.support().size() != 3) continue;
    const SignVector w = v.positive().size() == 2 ? v : -v;
    // A 3-circuit with all signs equal would make c0 infeasible.
    if (w.positive().size() != 2) continue;
    t.plus.push_back(w.positive().bits());
    t.minus.push_back(w.negative().bits());
  }
  return t;
}

std::vector<HyperplaneSet> enumerate_biclosed(const PointedArrangement& pa, std::uint64_t bound) {
  const std::size_t n = pa.size();
  if (n >= 63 || (std::uint64_t{1} << n) > bound) {
    throw Error(Errc::kBoundExceeded, "2^" + std::to_string(n) + " subsets exceed --bound " + std::to_string(bound));
  }
  std::vector<HyperplaneSet> out;
  for (std::uint64_t m : kernels::biclosed_scan_parallel(triangle_table(pa), n)) out.emplace_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HyperplaneSet> separation_sets(const PointedArrangement& pa) {
  std::vector<HyperplaneSet> out;
  for (const Chamber& c : pa.chambers()) out.push_back(pa.separation(c.sign));
  std::sort(out.begin(), out.end());
  return out;
}

HyperplaneSet rotate_biclosed(const PointedArrangement& pa, HyperplaneSet i, const SignVector& c) {
  return i ^ pa.separation(c);
}

std::optional<Chamber> join_via_2closure(const PointedArrangement& pa, const SignVector& c, const SignVector& d) {
  return is_separable(pa, closure_2(pa, pa.separation(c) | pa.separation(d)).closure);
}

}  // namespace hyparr
