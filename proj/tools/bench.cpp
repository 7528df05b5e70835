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

// Serial reference kernels against their OpenMP versions. Prints one row per
// (kernel, fixture) with the best-of-reps wall time of each.

#include <omp.h>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyparr/closure.hpp"
#include "hyparr/families.hpp"
#include "hyparr/gallery.hpp"
#include "hyparr/kernels.hpp"

namespace {

using namespace hyparr;

double best_ms(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

void row(const std::string& kernel, const std::string& fixture, double serial, double parallel, bool agree) {
  std::cout << std::left << std::setw(12) << kernel << std::setw(22) << fixture << std::right << std::fixed
            << std::setprecision(2) << std::setw(12) << serial << std::setw(12) << parallel << std::setw(9)
            << serial / std::max(parallel, 1e-9) << (agree ? "   same" : "   DIFFERENT") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyparr kernel benchmark"};
  int reps = 3;
  std::vector<std::string> fixtures{"braid:4", "typeB:3", "figure2-quad", "cyclic-generic:7:3"};
  app.add_option("--reps", reps, "repetitions, best time is reported");
  app.add_option("--fixture", fixtures, "name[:n[:d]]");
  CLI11_PARSE(app, argc, argv);

  std::cout << "threads " << omp_get_max_threads() << "\n";
  std::cout << std::left << std::setw(12) << "kernel" << std::setw(22) << "fixture" << std::right << std::setw(12)
            << "serial ms" << std::setw(12) << "omp ms" << std::setw(9) << "ratio" << "\n";
  bool all_agree = true;
  for (const std::string& text : fixtures) {
    FamilySpec spec;
    spec.name = text.substr(0, text.find(':'));
    if (text.find(':') != std::string::npos) {
      const std::string rest = text.substr(text.find(':') + 1);
      spec.n = std::stoul(rest);
      if (rest.find(':') != std::string::npos) spec.d = std::stoul(rest.substr(rest.find(':') + 1));
    }
    const PointedArrangement pa = make_family(spec);
    const std::string name = family_label(spec);
    const Arrangement& a = pa.arrangement();

    {
      std::vector<SignVector> s, p;
      const double ts = best_ms(reps, [&] { s = kernels::sign_pattern_scan_reference(a); });
      const double tp = best_ms(reps, [&] { p = kernels::sign_pattern_scan_parallel(a); });
      row("sign-scan", name, ts, tp, s == p);
      all_agree = all_agree && s == p;
    }
    {
      const TriangleTable t = triangle_table(pa);
      std::vector<std::uint64_t> s, p;
      const double ts = best_ms(reps, [&] { s = kernels::biclosed_scan_reference(t, pa.size()); });
      const double tp = best_ms(reps, [&] { p = kernels::biclosed_scan_parallel(t, pa.size()); });
      row("biclosed", name, ts, tp, s == p);
      all_agree = all_agree && s == p;
    }
    {
      std::vector<std::optional<std::size_t>> s, p;
      const double ts = best_ms(reps, [&] { s = kernels::closure_join_table_reference(pa); });
      const double tp = best_ms(reps, [&] { p = kernels::closure_join_table_parallel(pa); });
      row("join-table", name, ts, tp, s == p);
      all_agree = all_agree && s == p;
    }
    {
      const auto galleries = enumerate_galleries(pa, pa.c0(), -pa.c0(), std::uint64_t{1} << 22);
      const auto sigs = l2_signatures(pa, galleries);
      std::vector<GalleryEdge> s, p;
      const double ts = best_ms(reps, [&] { s = kernels::gallery_edges_reference(sigs); });
      const double tp = best_ms(reps, [&] { p = kernels::gallery_edges_parallel(sigs); });
      bool same = s.size() == p.size();
      for (std::size_t i = 0; same && i < s.size(); ++i) same = s[i].a == p[i].a && s[i].b == p[i].b && s[i].l2 == p[i].l2;
      row("edges", name, ts, tp, same);
      all_agree = all_agree && same;
    }
  }
  return all_agree ? 0 : 1;
}
