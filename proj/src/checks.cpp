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

#include "hyparr/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "hyparr/closure.hpp"
#include "hyparr/error.hpp"
#include "hyparr/gallery.hpp"
#include "hyparr/io.hpp"
#include "hyparr/kernels.hpp"
#include "hyparr/supersolvable.hpp"

namespace hyparr {
namespace {

using nlohmann::json;

struct Outcome {
  CheckStatus status = CheckStatus::kPass;
  std::string note;
  json witness;
};

Outcome pass(std::string note = {}) { return {CheckStatus::kPass, std::move(note), {}}; }
Outcome skip(std::string note) { return {CheckStatus::kSkipped, std::move(note), {}}; }
Outcome fail(std::string note, json witness) { return {CheckStatus::kFail, std::move(note), std::move(witness)}; }

struct Ctx {
  const PointedArrangement& pa;
  const CheckOptions& opt;
  const Arrangement& a() const { return pa.arrangement(); }
};

json labels(const Arrangement& a, HyperplaneSet s) {
  json out = json::array();
  s.for_each([&](std::size_t h) { out.push_back(a.label(h)); });
  return out;
}

std::string count_note(std::size_t x, const std::string& what) { return std::to_string(x) + " " + what; }

void guard(std::uint64_t amount, std::uint64_t bound, const std::string& what) {
  if (amount > bound) {
    throw Error(Errc::kBoundExceeded, what + " (" + std::to_string(amount) + ") exceeds --bound " + std::to_string(bound));
  }
}

std::uint64_t subsets(const Ctx& c) {
  const std::size_t n = c.pa.size();
  if (n >= 63) guard(~std::uint64_t{0}, c.opt.bound, "2^" + std::to_string(n) + " subsets");
  guard(std::uint64_t{1} << n, c.opt.bound, "2^" + std::to_string(n) + " subsets");
  return std::uint64_t{1} << n;
}

std::uint64_t power3(std::size_t n) {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < n; ++i) p = p > (~std::uint64_t{0}) / 3 ? ~std::uint64_t{0} : p * 3;
  return p;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t p = 1;
  for (std::size_t i = 2; i <= n; ++i) p = p > (~std::uint64_t{0}) / i ? ~std::uint64_t{0} : p * i;
  return p;
}

bool flag_incident(const PointedArrangement& pa) { return incident_modular_flag(pa).has_value(); }

// ---- main checks ----

Outcome check_biclosed(const Ctx& c) {
  const auto& pa = c.pa;
  const bool simplicial = is_simplicial(pa);
  const bool super = !simplicial && flag_incident(pa);
  const auto biclosed = enumerate_biclosed(pa, c.opt.bound);
  const auto seps = separation_sets(pa);
  std::vector<HyperplaneSet> diff;
  std::set_symmetric_difference(biclosed.begin(), biclosed.end(), seps.begin(), seps.end(), std::back_inserter(diff));
  const std::string counts = count_note(biclosed.size(), "biclosed, ") + count_note(seps.size(), "separation sets");
  if (!simplicial && !super && !c.opt.force) {
    std::string note = "hypotheses fail (neither simplicial nor supersolvable with flag-incident c0); " + counts;
    if (!diff.empty()) note += "; e.g. " + c.a().format_set(diff.front()) + " is biclosed but not separable";
    return skip(note);
  }
  if (diff.empty()) return pass(counts + (simplicial ? " (simplicial)" : super ? " (supersolvable)" : ""));
  const HyperplaneSet i = diff.front();
  return fail(counts, {{"subset", labels(c.a(), i)},
                       {"biclosed", is_biclosed(pa, i)},
                       {"separable", is_separable(pa, i).has_value()}});
}

Outcome check_join(const Ctx& c) {
  const auto& pa = c.pa;
  const bool bineighborly = is_bineighborly(pa);
  const bool super = !bineighborly && flag_incident(pa);
  const std::size_t n = pa.chambers().size();
  guard(static_cast<std::uint64_t>(n) * n, c.opt.bound, "chamber pairs");
  const ChamberPoset poset(pa);
  const auto table = kernels::closure_join_table_parallel(pa);
  std::optional<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t i = 0; i < n && !bad; ++i) {
    for (std::size_t j = 0; j < n && !bad; ++j) {
      if (poset.join(i, j) != table[i * n + j]) bad = std::make_pair(i, j);
    }
  }
  auto word = [&](const std::optional<std::size_t>& k) -> json {
    return k ? json(pa.chambers()[*k].sign.to_string()) : json(nullptr);
  };
  json witness;
  if (bad) {
    const auto [i, j] = *bad;
    witness = {{"c", pa.chambers()[i].sign.to_string()},
               {"d", pa.chambers()[j].sign.to_string()},
               {"poset_join", word(poset.join(i, j))},
               {"closure_join", word(table[i * n + j])}};
  }
  if (!bineighborly && !super && !c.opt.force) {
    const ClosureReport w = closure_2(pa, walls(pa, pa.c0()));
    std::string note = "hypotheses fail (neither bineighborly nor supersolvable with flag-incident c0); 2-closure of W(c0) is " +
                       c.a().format_set(w.closure) + (is_separable(pa, w.closure) ? ", separable" : ", not separable");
    if (bad) note += "; closure join differs from poset join at " + witness.dump();
    return skip(note);
  }
  if (!bad) return pass(count_note(n * n, "pairs agree"));
  return fail("closure join differs from poset join", witness);
}

Outcome check_gallery(const Ctx& c) {
  const auto& pa = c.pa;
  const Arrangement& a = c.a();
  guard(factorial(pa.size()), c.opt.bound, std::to_string(pa.size()) + "! permutations");
  const bool hyp = enumerate_biclosed(pa, c.opt.bound) == separation_sets(pa);
  const AdmissibilityOracle oracle(pa);
  std::vector<std::vector<std::size_t>> admissible;
  std::vector<std::size_t> perm(pa.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (oracle.is_admissible(perm)) admissible.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::vector<std::size_t>> realized;
  for (const Gallery& g : enumerate_galleries(pa, pa.c0(), -pa.c0(), c.opt.bound)) realized.push_back(g.order);
  std::sort(realized.begin(), realized.end());

  // Block reversal keeps admissibility unconditionally.
  std::size_t flips = 0;
  for (const auto& order : admissible) {
    for (std::size_t k = 0; k < pa.l2().size(); ++k) {
      const auto flipped = flip_admissible_block(pa, order, pa.l2_flat(k));
      if (!flipped) continue;
      ++flips;
      if (!oracle.is_admissible(*flipped)) {
        return fail("block flip left the admissible orders",
                    {{"order", a.format_order(order)}, {"flat", labels(a, pa.l2_flat(k).contains)}});
      }
      if ((hyp || c.opt.force) && !gallery_from_order(pa, pa.c0(), *flipped)) {
        return fail("block flip of a gallery order is not a gallery order",
                    {{"order", a.format_order(order)}, {"flat", labels(a, pa.l2_flat(k).contains)}});
      }
    }
  }
  std::vector<std::vector<std::size_t>> diff;
  std::set_symmetric_difference(admissible.begin(), admissible.end(), realized.begin(), realized.end(),
                                std::back_inserter(diff));
  const std::string counts = count_note(admissible.size(), "admissible, ") + count_note(realized.size(), "gallery orders, ") +
                             count_note(flips, "block flips");
  if (!hyp && !c.opt.force) {
    std::string note = "hypotheses fail (some biclosed set is not separable); " + counts;
    if (!diff.empty()) note += "; e.g. " + a.format_order(diff.front()) + " is admissible but not a gallery order";
    return skip(note);
  }
  if (diff.empty()) return pass(counts);
  const auto& order = diff.front();
  return fail(counts, {{"order", a.format_order(order)},
                       {"admissible", oracle.is_admissible(order)},
                       {"gallery", std::binary_search(realized.begin(), realized.end(), order)}});
}

Outcome check_diameter(const Ctx& c) {
  const auto& pa = c.pa;
  const GalleryGraph g = build_gallery_graph(pa, pa.c0(), -pa.c0(), c.opt.bound);
  const auto d = diameter(g);
  const std::size_t l2 = pa.l2().size();
  std::size_t accessible = 0;
  for (std::size_t r = 0; r < g.galleries.size(); ++r) accessible += is_l2_accessible(pa, g, r);
  const json witness = {{"diameter", d ? json(*d) : json(nullptr)}, {"l2", l2}, {"accessible", accessible}};
  const std::string counts = "diameter " + (d ? std::to_string(*d) : std::string("inf")) + ", |L2| " +
                             std::to_string(l2) + ", " + count_note(accessible, "accessible galleries");
  // An accessible gallery forces diameter |L2| on every fixture.
  if (accessible > 0 && d != l2) return fail("accessible gallery but diameter differs from |L2|", witness);
  if (!flag_incident(pa) && !c.opt.force) return skip("hypotheses fail (no flag-incident modular flag); " + counts);
  if (d == l2) return pass(counts);
  return fail(counts, witness);
}

// ---- axiom suites ----

Outcome covector_axioms(const Ctx& c) {
  const Arrangement& a = c.a();
  const std::size_t n = a.size();
  guard(power3(n), c.opt.bound, "3^" + std::to_string(n) + " sign words");
  const std::vector<SignVector> scan = kernels::sign_pattern_scan_parallel(a);
  const std::unordered_set<SignVector, SignVectorHash> set(scan.begin(), scan.end());
  if (!set.count(SignVector(n))) return fail("(L0) zero vector missing", {{"axiom", "L0"}});
  for (const SignVector& x : scan) {
    if (!set.count(-x)) return fail("(L1) fails", {{"axiom", "L1"}, {"x", x.to_string()}});
  }
  for (const SignVector& x : scan) {
    for (const SignVector& y : scan) {
      const SignVector xy = compose(x, y);
      if (!set.count(xy)) return fail("(L2) fails", {{"axiom", "L2"}, {"x", x.to_string()}, {"y", y.to_string()}});
      const HyperplaneSet sep = separation(x, y);
      for (std::size_t e : sep.indices()) {
        const HyperplaneSet fixed = HyperplaneSet::full(n) - sep;
        const bool found = std::any_of(scan.begin(), scan.end(), [&](const SignVector& z) {
          return z.at(e) == Sign::kZero && (z.positive() & fixed) == (xy.positive() & fixed) &&
                 (z.negative() & fixed) == (xy.negative() & fixed);
        });
        if (!found) {
          return fail("(L3) fails", {{"axiom", "L3"}, {"x", x.to_string()}, {"y", y.to_string()}, {"e", a.label(e)}});
        }
      }
    }
  }
  // Face enumeration through flats and Mandel's criterion must agree with the scan.
  std::vector<SignVector> by_flats;
  for (const Covector& x : enumerate_covectors(a, c.pa.chambers(), c.pa.flats())) by_flats.push_back(x.sign);
  if (by_flats != scan) return fail("flat-wise covector enumeration differs from the scan", {{"oracle", "covectors"}});
  const std::uint64_t total = power3(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    SignVector w(n);
    std::uint64_t rest = code;
    for (std::size_t k = 0; k < n; ++k, rest /= 3) {
      w.set(k, rest % 3 == 0 ? Sign::kPlus : rest % 3 == 1 ? Sign::kMinus : Sign::kZero);
    }
    if (is_covector(c.pa.table(), c.pa.chambers(), w) != (set.count(w) > 0)) {
      return fail("Mandel's criterion disagrees with feasibility", {{"word", w.to_string()}});
    }
  }
  return pass(count_note(scan.size(), "covectors"));
}

Outcome metric_axioms(const Ctx& c) {
  const auto& pa = c.pa;
  const Arrangement& a = c.a();
  const GalleryGraph g = build_gallery_graph(pa, pa.c0(), -pa.c0(), c.opt.bound);
  const std::size_t m = g.galleries.size();
  guard(static_cast<std::uint64_t>(m) * m * m, c.opt.bound, "gallery triples");
  const std::size_t flats = pa.l2().size();
  const std::size_t words = (flats + 63) / 64;
  std::vector<std::vector<std::uint64_t>> sep(m * m, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k : l2_separation(pa, g.galleries[i], g.galleries[j])) sep[i * m + j][k / 64] |= std::uint64_t{1} << (k % 64);
    }
  }
  auto size_of = [&](const std::vector<std::uint64_t>& s) {
    std::size_t total = 0;
    for (std::uint64_t w : s) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  };
  auto pair = [&](std::size_t i, std::size_t j) -> json {
    return {{"r", a.format_order(g.galleries[i].order)}, {"r2", a.format_order(g.galleries[j].order)}};
  };
  for (std::size_t i = 0; i < m; ++i) {
    if (size_of(sep[i * m + i]) != 0) return fail("L2(r,r) nonempty", pair(i, i));
    for (std::size_t j = 0; j < m; ++j) {
      if (sep[i * m + j] != sep[j * m + i]) return fail("(M1) fails", pair(i, j));
      if (i != j && size_of(sep[i * m + j]) == 0) return fail("distinct galleries with empty L2", pair(i, j));
    }
    for (std::size_t j : g.adjacency[i]) {
      if (size_of(sep[i * m + j]) != 1) return fail("(M2) fails", pair(i, j));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t w = 0; w < words; ++w) {
          if (sep[i * m + j][w] != (sep[i * m + k][w] ^ sep[k * m + j][w])) {
            json out = pair(i, j);
            out["r3"] = a.format_order(g.galleries[k].order);
            return fail("(M3) fails", out);
          }
        }
      }
    }
    // Graph distance is bounded below by |L2|.
    const auto dist = bfs_distances(g, i);
    for (std::size_t j = 0; j < m; ++j) {
      if (dist[j] < size_of(sep[i * m + j])) return fail("graph distance below |L2|", pair(i, j));
    }
  }
  return pass(count_note(m, "galleries"));
}

Outcome closure_axioms(const Ctx& c) {
  const auto& pa = c.pa;
  const Arrangement& a = c.a();
  const std::uint64_t total = subsets(c);
  std::vector<std::size_t> reversed(pa.reoriented_circuits().size());
  std::iota(reversed.rbegin(), reversed.rend(), 0);
  for (ClosureKind kind : {ClosureKind::kTwo, ClosureKind::kConvex}) {
    const std::string name = kind == ClosureKind::kTwo ? "2-closure" : "convex closure";
    auto closed = [&](HyperplaneSet i) { return kind == ClosureKind::kTwo ? is_2closed(pa, i) : is_convex(pa, i); };
    std::vector<HyperplaneSet> hull(total);
    std::vector<HyperplaneSet> closed_sets;
    for (std::uint64_t m = 0; m < total; ++m) {
      const HyperplaneSet i(m);
      const ClosureReport r = closure(pa, i, kind);
      hull[m] = r.closure;
      if (closed(i)) closed_sets.push_back(i);
      const json w = {{"kind", name}, {"subset", labels(a, i)}};
      if (!i.is_subset_of(r.closure)) return fail(name + " not extensive", w);
      if (!closed(r.closure)) return fail(name + " result not closed", w);
      if (closure(pa, r.closure, kind).closure != r.closure) return fail(name + " not idempotent", w);
      if (closed(i) != (r.closure == i)) return fail(name + " fixes a non-closed set", w);
      if (!verify_closure_report(pa, r, kind)) return fail(name + " forcing chain does not replay", w);
      if (closure(pa, i, kind, &reversed).closure != r.closure) return fail(name + " depends on circuit order", w);
    }
    for (std::uint64_t m = 0; m < total; ++m) {
      const HyperplaneSet i(m);
      // Smallest closed superset.
      HyperplaneSet meet = pa.all();
      for (HyperplaneSet j : closed_sets) {
        if (i.is_subset_of(j)) meet &= j;
      }
      if (meet != hull[m]) return fail(name + " is not the smallest closed superset", {{"kind", name}, {"subset", labels(a, i)}});
      // Monotone along single additions, hence everywhere.
      for (std::size_t h : (pa.all() - i).indices()) {
        if (!hull[m].is_subset_of(hull[m | (std::uint64_t{1} << h)])) {
          return fail(name + " not monotone", {{"kind", name}, {"subset", labels(a, i)}, {"added", a.label(h)}});
        }
      }
    }
  }
  return pass(count_note(total, "subsets, both closures"));
}

Outcome chamber_poset(const Ctx& c) {
  const auto& pa = c.pa;
  const Arrangement& a = c.a();
  const ChamberPoset poset(pa);
  const std::size_t n = poset.size();
  guard(static_cast<std::uint64_t>(n) * n, c.opt.bound, "chamber pairs");
  // (2) bounded and graded.
  if (poset.chamber(poset.bottom()) != pa.c0() || poset.chamber(poset.top()) != -pa.c0()) {
    return fail("poset bounds are not c0 and -c0", {{"part", 2}});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !poset.leq(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k) {
        cover = k == i || k == j || !(poset.leq(i, k) && poset.leq(k, j));
      }
      if (cover && poset.rank(j) != poset.rank(i) + 1) {
        return fail("cover with rank jump", {{"part", 2}, {"c", poset.chamber(i).to_string()}, {"d", poset.chamber(j).to_string()}});
      }
    }
  }
  // (3) W(c) ⊆ S(c, c') forces c' = -c.
  for (std::size_t i = 0; i < n; ++i) {
    const HyperplaneSet w = walls(pa, poset.chamber(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (w.is_subset_of(separation(poset.chamber(i), poset.chamber(j))) && poset.chamber(j) != -poset.chamber(i)) {
        return fail("walls separated but not opposite", {{"part", 3}, {"c", poset.chamber(i).to_string()}, {"d", poset.chamber(j).to_string()}});
      }
    }
  }
  // (1) chambers incident to a face form an interval isomorphic to the localization's poset.
  for (const Covector& x : enumerate_covectors(a, pa.chambers(), pa.flats())) {
    const HyperplaneSet key = x.sign.zero_set();
    const auto lo = poset.index_of(compose(x.sign, pa.c0()));
    const auto hi = poset.index_of(compose(x.sign, -pa.c0()));
    const json w = {{"part", 1}, {"face", x.sign.to_string()}};
    if (!lo || !hi) return fail("face endpoints are not chambers", w);
    std::vector<std::size_t> incident;
    for (std::size_t k = 0; k < n; ++k) {
      const bool inc = compose(x.sign, poset.chamber(k)) == poset.chamber(k);
      const bool between = poset.leq(*lo, k) && poset.leq(k, *hi);
      if (inc != between) return fail("incident chambers are not the interval", w);
      if (inc) incident.push_back(k);
    }
    std::set<std::uint64_t> local;
    for (std::size_t k = 0; k < n; ++k) local.insert((poset.sep(k) & key).bits());
    std::set<std::uint64_t> image;
    for (std::size_t k : incident) image.insert((poset.sep(k) & key).bits());
    if (image != local || image.size() != incident.size()) return fail("interval is not in bijection with the localization", w);
    for (std::size_t p : incident) {
      for (std::size_t q : incident) {
        if (poset.leq(p, q) != (poset.sep(p) & key).is_subset_of(poset.sep(q) & key)) {
          return fail("interval order differs from the localization's", w);
        }
      }
    }
    // Join of the covers of x∘c0 inside the interval is x∘(-c0).
    std::vector<std::size_t> covers;
    for (std::size_t k : poset.upper_covers(*lo)) {
      if (std::binary_search(incident.begin(), incident.end(), k)) covers.push_back(k);
    }
    if (!covers.empty() && poset.join(covers) != hi) return fail("join of covers is not x∘(-c0)", w);
  }
  // Cover-pair lattice test against a full scan.
  bool full = true;
  for (std::size_t i = 0; i < n && full; ++i) {
    for (std::size_t j = 0; j < n && full; ++j) full = poset.join(i, j) && poset.meet(i, j);
  }
  const bool local = poset.is_lattice();
  if (local != full) return fail("cover-pair lattice test disagrees with full scan", {{"local", local}, {"full", full}});
  if (is_bineighborly(pa, WallSide::kUpper) && !full) return fail("upper-wall incidence holds but not a lattice", {{"lattice", full}});
  return pass(count_note(n, "chambers") + (full ? ", lattice" : ", not a lattice"));
}

Outcome incidence(const Ctx& c) {
  const auto& pa = c.pa;
  for (const Chamber& ch : pa.chambers()) {
    if (walls(pa, ch.sign) != walls_by_feasibility(c.a(), ch.sign)) {
      return fail("wall tests disagree", {{"c", ch.sign.to_string()}});
    }
    for (const Flat& x : pa.flats()) {
      if (is_incident(pa, ch.sign, x) != is_incident_by_separation(pa, ch.sign, x)) {
        return fail("covector and separation incidence disagree", {{"c", ch.sign.to_string()}, {"flat", labels(c.a(), x.contains)}});
      }
    }
  }
  return pass(count_note(pa.chambers().size() * pa.flats().size(), "chamber-flat pairs"));
}

Outcome rotation(const Ctx& c) {
  const auto& pa = c.pa;
  const std::uint64_t total = subsets(c);
  const TriangleTable base = triangle_table(pa);
  for (const Chamber& ch : pa.chambers()) {
    const PointedArrangement other = pa.rebased(ch.sign);
    const TriangleTable t = triangle_table(other);
    const HyperplaneSet s = pa.separation(ch.sign);
    for (std::uint64_t m = 0; m < total; ++m) {
      if (biclosed_mask(base, m) != biclosed_mask(t, m ^ s.bits())) {
        return fail("biclosed not preserved by rotation", {{"subset", labels(c.a(), HyperplaneSet(m))}, {"c", ch.sign.to_string()}});
      }
    }
    if (rotate_biclosed(pa, {}, ch.sign) != s) return fail("rotation of the empty set", {{"c", ch.sign.to_string()}});
  }
  return pass(count_note(pa.chambers().size(), "base chambers"));
}

Outcome interval_closed(const Ctx& c) {
  const auto& pa = c.pa;
  const ChamberPoset poset(pa);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    for (std::size_t j = 0; j < poset.size(); ++j) {
      if (!poset.leq(i, j)) continue;
      ++pairs;
      const HyperplaneSet s = separation(poset.chamber(i), poset.chamber(j));
      if (!is_convex(pa, s) || !is_convex_by_chambers(pa, s)) {
        return fail("S(c,d) not convex", {{"c", poset.chamber(i).to_string()}, {"d", poset.chamber(j).to_string()}});
      }
    }
  }
  return pass(count_note(pairs, "comparable pairs"));
}

Outcome dictionary(const Ctx& c) {
  const auto& pa = c.pa;
  const std::uint64_t total = subsets(c);
  for (std::uint64_t m = 0; m < total; ++m) {
    const HyperplaneSet i(m);
    const json w = {{"subset", labels(c.a(), i)}};
    if (is_separable(pa, i).has_value() != is_separable_by_circuits(pa, i)) return fail("(1) separable forms disagree", w);
    if (is_convex(pa, i) != is_convex_by_chambers(pa, i)) return fail("(2) convex forms disagree", w);
    if (is_2closed(pa, i) != is_2closed_by_localization(pa, i)) return fail("(3) 2-closed forms disagree", w);
  }
  return pass(count_note(total, "subsets"));
}

Outcome bisimplicial(const Ctx& c) {
  const auto& pa = c.pa;
  const bool nb_lower = is_bineighborly(pa, WallSide::kLower);
  const bool nb_upper = is_bineighborly(pa, WallSide::kUpper);
  const bool bs_lower = is_bisimplicial(pa, WallSide::kLower);
  const bool bs_upper = is_bisimplicial(pa, WallSide::kUpper);
  const json w = {{"bineighborly", {nb_lower, nb_upper}}, {"bisimplicial", {bs_lower, bs_upper}}};
  if (nb_lower != nb_upper) return fail("bineighborly depends on wall side", w);
  if (bs_lower != bs_upper) return fail("bisimplicial depends on wall side", w);
  if (nb_lower && !bs_lower) return fail("bineighborly but not bisimplicial", w);
  return pass(std::string(nb_lower ? "bineighborly, " : "not bineighborly, ") + (bs_lower ? "bisimplicial" : "not bisimplicial"));
}

Outcome depth_simplicial(const Ctx& c) {
  const auto& pa = c.pa;
  const HyperplaneSet w0 = walls(pa, pa.c0());
  for (std::size_t h = 0; h < pa.size(); ++h) {
    if ((depth(pa, h) == 1) != w0.contains(h)) return fail("depth 1 differs from walls of c0", {{"hyperplane", c.a().label(h)}});
  }
  if (!is_simplicial(pa) && !c.opt.force) return skip("hypotheses fail (not simplicial)");
  const std::uint64_t total = subsets(c);
  for (std::uint64_t m = 0; m < total; ++m) {
    const HyperplaneSet i(m);
    if (w0.is_subset_of(i) && i != pa.all() && is_2closed(pa, i)) {
      return fail("2-closed superset of W(c0) is proper", {{"subset", labels(c.a(), i)}});
    }
  }
  return pass("W(c0) = " + c.a().format_set(w0));
}

Outcome fiber(const Ctx& c) {
  const auto& pa = c.pa;
  const Arrangement& a = c.a();
  if (!flag_incident(pa) && !c.opt.force) return skip("hypotheses fail (no flag-incident modular flag)");
  std::size_t lines = 0;
  for (const Flat& l : pa.flats()) {
    if (l.codim + 1 != a.rank() || !is_modular(a, pa.flats(), l) || !is_incident(pa, pa.c0(), l)) continue;
    ++lines;
    try {
      if (!check_fiber_betweenness(pa, l)) return fail("betweenness fails", {{"line", labels(a, l.contains)}});
    } catch (const Error& e) {
      return fail(e.what(), {{"line", labels(a, l.contains)}});
    }
  }
  return pass(count_note(lines, "incident modular lines"));
}

Outcome implications(const Ctx& c) {
  const auto& pa = c.pa;
  const std::uint64_t total = subsets(c);
  const bool rank2 = c.a().rank() <= 2;
  for (std::uint64_t m = 0; m < total; ++m) {
    const HyperplaneSet i(m);
    const bool separable = is_separable(pa, i).has_value();
    const bool biconvex = is_biconvex(pa, i);
    const bool biclosed = is_biclosed(pa, i);
    const json w = {{"subset", labels(c.a(), i)}, {"separable", separable}, {"biconvex", biconvex}, {"biclosed", biclosed}};
    if ((separable && !biconvex) || (biconvex && !biclosed)) return fail("separable => biconvex => biclosed fails", w);
    if (is_convex(pa, i) && !is_2closed(pa, i)) return fail("convex but not 2-closed", w);
    if (rank2 && separable != biclosed) return fail("rank 2 but biclosed differs from separable", w);
  }
  return pass(count_note(total, "subsets"));
}

// Prop: some r' has L2(r, r') = {X} iff r is incident to X.
std::optional<json> gallery_incidence_between(const PointedArrangement& pa, const SignVector& from, const SignVector& to,
                                              std::uint64_t bound, std::size_t& checked) {
  const Arrangement& a = pa.arrangement();
  const GalleryGraph g = build_gallery_graph(pa, from, to, bound);
  for (std::size_t r = 0; r < g.galleries.size(); ++r) {
    std::set<std::size_t> adjacent_flats;
    for (const GalleryEdge& e : g.edges) {
      if (e.a == r || e.b == r) adjacent_flats.insert(e.l2);
    }
    for (std::size_t k = 0; k < pa.l2().size(); ++k) {
      ++checked;
      const Flat& x = pa.l2_flat(k);
      const bool incident = is_gallery_incident(pa, g.galleries[r], x);
      const json w = {{"from", from.to_string()}, {"to", to.to_string()},
                      {"gallery", a.format_order(g.galleries[r].order)}, {"flat", labels(a, x.contains)}};
      if (incident != (adjacent_flats.count(k) > 0)) return w;
      const auto flipped = flip(pa, g.galleries[r], x);
      if (flipped.has_value() != incident) return w;
      if (flipped) {
        if (l2_separation(pa, g.galleries[r], *flipped) != std::vector<std::size_t>{k}) return w;
        const auto back = flip(pa, *flipped, x);
        if (!back || !(*back == g.galleries[r])) return w;
      }
    }
  }
  return std::nullopt;
}

Outcome gallery_incidence(const Ctx& c) {
  const auto& pa = c.pa;
  std::size_t checked = 0;
  if (auto w = gallery_incidence_between(pa, pa.c0(), -pa.c0(), c.opt.bound, checked)) {
    return fail("adjacency and incidence disagree", *w);
  }
  // Non-antipodal endpoints: the literal definition, reported separately.
  std::string note = count_note(checked, "gallery-flat pairs from c0 to -c0");
  const ChamberPoset poset(pa);
  std::optional<std::size_t> mid;
  for (std::size_t k = 0; k < poset.size(); ++k) {
    if (poset.rank(k) == pa.size() / 2 && poset.rank(k) > 1) {
      mid = k;
      break;
    }
  }
  if (mid) {
    std::size_t extra = 0;
    const auto w = gallery_incidence_between(pa, pa.c0(), poset.chamber(*mid), c.opt.bound, extra);
    note += "; non-antipodal endpoints c0 -> " + poset.chamber(*mid).to_string() + ": " +
            (w ? "equivalence fails at " + w->dump() : "equivalence holds on " + std::to_string(extra) + " pairs");
  }
  return pass(note);
}

Outcome oracle(const Ctx& c) {
  const auto& pa = c.pa;
  const Arrangement& a = c.a();
  const std::size_t n = a.size();
  guard(power3(n), c.opt.bound, "3^" + std::to_string(n) + " sign words");
  const auto scan = kernels::sign_pattern_scan_parallel(a);
  if (scan != kernels::sign_pattern_scan_reference(a)) return fail("parallel sign scan differs from reference", {{"kernel", "sign-scan"}});
  std::vector<SignVector> full;
  for (const SignVector& w : scan) {
    if (w.is_full()) full.push_back(w);
  }
  std::vector<SignVector> bfs;
  for (const Chamber& ch : pa.chambers()) bfs.push_back(ch.sign);
  if (bfs != full) return fail("chamber search differs from the sign scan", {{"bfs", bfs.size()}, {"scan", full.size()}});

  const std::uint64_t total = subsets(c);
  const TriangleTable t = triangle_table(pa);
  if (kernels::biclosed_scan_parallel(t, n) != kernels::biclosed_scan_reference(t, n)) {
    return fail("parallel biclosed scan differs from reference", {{"kernel", "biclosed"}});
  }
  // Ranks: fraction-free elimination against reduced row echelon form.
  for (std::uint64_t m = 0; m < total; ++m) {
    const auto rows = a.normals(HyperplaneSet(m));
    if (a.rank_of(HyperplaneSet(m)) != rref(rows, a.dim()).size()) return fail("rank methods disagree", {{"subset", labels(a, HyperplaneSet(m))}});
  }
  // Circuits: exactly the minimal infeasible sign patterns of size <= rank + 1.
  auto infeasible = [&](HyperplaneSet support, const SignVector& v) {
    std::vector<SignConstraint> cons;
    support.for_each([&](std::size_t h) { cons.push_back({a.normal(h), v.at(h)}); });
    return !strict_feasible(cons).has_value();
  };
  std::set<SignVector> expected;
  for (std::uint64_t m = 1; m < total; ++m) {
    const HyperplaneSet s(m);
    if (s.size() > a.rank() + 1) continue;
    const std::vector<std::size_t> members = s.indices();
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << members.size()); ++signs) {
      SignVector v(n);
      for (std::size_t k = 0; k < members.size(); ++k) v.set(members[k], (signs >> k) & 1 ? Sign::kMinus : Sign::kPlus);
      if (v.at(members[0]) != Sign::kPlus || !infeasible(s, v)) continue;
      bool minimal = true;
      for (std::size_t h : members) {
        HyperplaneSet smaller = s;
        smaller.erase(h);
        if (!smaller.empty() && infeasible(smaller, v)) minimal = false;
      }
      if (minimal) expected.insert(v);
    }
  }
  std::set<SignVector> found;
  for (const Circuit& circ : pa.circuits()) found.insert(circ.sign);
  if (found != expected) return fail("circuit enumeration differs from the minimal-infeasibility oracle", {{"found", found.size()}, {"expected", expected.size()}});

  guard(static_cast<std::uint64_t>(pa.chambers().size()) * pa.chambers().size(), c.opt.bound, "chamber pairs");
  if (kernels::closure_join_table_parallel(pa) != kernels::closure_join_table_reference(pa)) {
    return fail("parallel join table differs from reference", {{"kernel", "join"}});
  }
  const auto galleries = enumerate_galleries(pa, pa.c0(), -pa.c0(), c.opt.bound);
  const auto sigs = l2_signatures(pa, galleries);
  const auto e1 = kernels::gallery_edges_parallel(sigs);
  const auto e2 = kernels::gallery_edges_reference(sigs);
  auto same = [](const GalleryEdge& x, const GalleryEdge& y) { return x.a == y.a && x.b == y.b && x.l2 == y.l2; };
  if (e1.size() != e2.size() || !std::equal(e1.begin(), e1.end(), e2.begin(), same)) {
    return fail("parallel gallery edges differ from reference", {{"kernel", "edges"}});
  }
  return pass(count_note(full.size(), "chambers, ") + count_note(scan.size(), "covectors, ") + count_note(found.size(), "circuits"));
}

Outcome extension(const Ctx& c) {
  const Arrangement& a = c.a();
  const Arrangement e = supersolvable_extension(a);
  const json w = {{"extension", json::parse(arrangement_to_json(e))}};
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (e.normal(h) != a.normal(h)) return fail("extension does not start with the input", w);
  }
  if (e.rank() != a.rank()) return fail("extension changed the rank", w);
  const auto flag = is_supersolvable(e);
  if (!flag) return fail("extension is not supersolvable", w);
  const auto flats = intersection_lattice(e);
  for (const Flat& x : flag->flats) {
    if (!is_modular(e, flats, x)) return fail("witness flag has a non-modular member", w);
  }
  if (flag->flats.size() + 1 != std::max<std::size_t>(e.rank(), 1)) return fail("witness flag has the wrong length", w);
  if (is_supersolvable(a).has_value() != modular_flag_by_search(a).has_value()) {
    return fail("recursive and exhaustive supersolvability disagree", {{"arrangement", "input"}});
  }
  if (!modular_flag_by_search(e)) return fail("exhaustive search finds no flag in the extension", w);
  return pass("added " + std::to_string(e.size() - a.size()) + " hyperplanes");
}

using CheckFn = Outcome (*)(const Ctx&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> table = {
      {"1.1", check_biclosed},
      {"1.2", check_join},
      {"1.3", check_gallery},
      {"diameter", check_diameter},
      {"covector-axioms", covector_axioms},
      {"metric-axioms", metric_axioms},
      {"closure-axioms", closure_axioms},
      {"chamber-poset", chamber_poset},
      {"incidence", incidence},
      {"rotation", rotation},
      {"interval-closed", interval_closed},
      {"dictionary", dictionary},
      {"bisimplicial", bisimplicial},
      {"depth-simplicial", depth_simplicial},
      {"fiber", fiber},
      {"implications", implications},
      {"gallery-incidence", gallery_incidence},
      {"oracle", oracle},
      {"extension", extension},
  };
  return table;
}

}  // namespace

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkipped:
      return "skipped";
  }
  return "?";
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

CheckReport run_check(const std::string& selector, const PointedArrangement& pa, const std::string& fixture,
                      const CheckOptions& options) {
  const std::string name = selector.rfind("thm-", 0) == 0 ? selector.substr(4) : selector;
  const auto& table = registry();
  const auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == name; });
  if (it == table.end()) throw Error(Errc::kUnknownSelector, "unknown check '" + selector + "'");
  const auto start = std::chrono::steady_clock::now();
  const Outcome out = it->second(Ctx{pa, options});
  CheckReport report;
  report.check = name;
  report.fixture = fixture;
  report.status = out.status;
  report.note = out.note;
  report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (out.status == CheckStatus::kFail) {
    report.counterexample = {{"check", name},
                             {"fixture", fixture},
                             {"arrangement", json::parse(arrangement_to_json(pa.arrangement(), pa.c0()))},
                             {"c0", pa.c0().to_string()},
                             {"witness", out.witness}};
  }
  return report;
}

std::vector<CheckReport> run_all_checks(const PointedArrangement& pa, const std::string& fixture, const CheckOptions& options) {
  std::vector<CheckReport> out;
  for (const std::string& name : check_names()) out.push_back(run_check(name, pa, fixture, options));
  return out;
}

json report_json(const CheckReport& r, bool with_timing) {
  json out = {{"check", r.check}, {"fixture", r.fixture}, {"status", status_name(r.status)}, {"note", r.note}};
  if (with_timing) out["millis"] = r.millis;
  if (r.status == CheckStatus::kFail) out["counterexample"] = r.counterexample;
  return out;
}

CheckReport replay(const json& payload, const CheckOptions& options) {
  const json& p = payload.contains("counterexample") ? payload["counterexample"] : payload;
  if (!p.contains("check") || !p.contains("arrangement") || !p.contains("c0")) {
    throw Error(Errc::kParse, "replay payload needs check, arrangement and c0");
  }
  ArrangementFile f = parse_arrangement_json(p["arrangement"].dump());
  const PointedArrangement pa(std::move(f.arrangement), SignVector::from_string(p["c0"].get<std::string>()));
  CheckOptions forced = options;
  forced.force = true;
  return run_check(p["check"].get<std::string>(), pa, p.value("fixture", std::string("replay")), forced);
}

bool replay_reproduces(const json& payload, const CheckOptions& options) {
  const json& p = payload.contains("counterexample") ? payload["counterexample"] : payload;
  const CheckReport again = replay(p, options);
  return again.status == CheckStatus::kFail && again.counterexample.value("witness", json()) == p.value("witness", json());
}

}  // namespace hyparr
