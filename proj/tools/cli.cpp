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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hyparr/checks.hpp"
#include "hyparr/closure.hpp"
#include "hyparr/error.hpp"
#include "hyparr/families.hpp"
#include "hyparr/gallery.hpp"
#include "hyparr/io.hpp"
#include "hyparr/supersolvable.hpp"
#include "json.hpp"

namespace hyparr::cli {
namespace {

using nlohmann::json;

struct Source {
  std::string family;
  std::size_t n = 0;
  std::size_t d = 0;
  std::string file;
  std::string c0;
};

struct Common {
  Source source;
  std::string format = "text";
  bool count = false;
  std::uint64_t bound = std::uint64_t{1} << 20;
};

FamilySpec spec_of(const Source& s) {
  FamilySpec spec;
  spec.name = s.family.empty() ? (s.file.empty() ? "" : "from-file") : s.family;
  if (spec.name.empty()) throw Error(Errc::kParse, "give --family or --file");
  spec.n = s.n;
  spec.d = s.d;
  spec.file = s.file;
  if (!s.c0.empty()) spec.c0 = SignVector::from_string(s.c0);
  return spec;
}

// "braid:4", "cyclic-generic:5:3", "figure2"
FamilySpec parse_fixture(const std::string& text) {
  FamilySpec spec;
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, ':');) parts.push_back(part);
  if (parts.empty() || parts.size() > 3) throw Error(Errc::kParse, "bad fixture '" + text + "'");
  spec.name = parts[0];
  auto number = [&](const std::string& p) -> std::size_t {
    if (p.empty() || !std::all_of(p.begin(), p.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
      throw Error(Errc::kParse, "bad fixture parameter '" + p + "' in '" + text + "'");
    }
    return std::stoul(p);
  };
  if (parts.size() > 1) spec.n = number(parts[1]);
  if (parts.size() > 2) spec.d = number(parts[2]);
  return spec;
}

void add_source(CLI::App* sub, Common& c) {
  sub->add_option("--family", c.source.family, "braid, typeB, figure1, figure2, figure2-quad, cyclic-generic, from-file");
  sub->add_option("--n", c.source.n, "family parameter");
  sub->add_option("--d", c.source.d, "dimension for cyclic-generic");
  sub->add_option("--file", c.source.file, "arrangement JSON");
  sub->add_option("--c0", c.source.c0, "fundamental chamber as a sign word, e.g. +--+");
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
  sub->add_flag("--count", c.count, "print only the number of items");
  sub->add_option("--bound", c.bound, "enumeration guard")->envname("HYPARR_BOUND");
}

json set_json(const Arrangement& a, HyperplaneSet s) {
  json out = json::array();
  s.for_each([&](std::size_t h) { out.push_back(a.label(h)); });
  return out;
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (const Rational& q : v) out.push_back(format_rational(q));
  return out;
}

std::string vector_text(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + format_rational(v[i]);
  return out + ")";
}

void require_format(const Common& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (c.format == f) return;
  }
  throw Error(Errc::kParse, "--format " + c.format + " is not available for this command");
}

int cmd_chambers(const Common& c, std::ostream& out) {
  require_format(c, {"text", "json"});
  const PointedArrangement pa = make_family(spec_of(c.source));
  const Arrangement& a = pa.arrangement();
  if (c.count) {
    out << pa.chambers().size() << "\n";
    return kOk;
  }
  if (c.format == "json") {
    json doc = json::array();
    for (const Chamber& ch : pa.chambers()) {
      doc.push_back({{"sign", ch.sign.to_string()}, {"separation", set_json(a, pa.separation(ch.sign))},
                     {"witness", vector_json(ch.witness)}});
    }
    out << doc.dump() << "\n";
  } else {
    for (const Chamber& ch : pa.chambers()) {
      out << ch.sign.to_string() << " " << a.format_set(pa.separation(ch.sign)) << " " << vector_text(ch.witness) << "\n";
    }
  }
  return kOk;
}

int cmd_covectors(const Common& c, std::ostream& out) {
  require_format(c, {"text", "json"});
  const PointedArrangement pa = make_family(spec_of(c.source));
  const auto covectors = enumerate_covectors(pa.arrangement(), pa.chambers(), pa.flats());
  if (c.count) {
    out << covectors.size() << "\n";
    return kOk;
  }
  if (c.format == "json") {
    json doc = json::array();
    for (const Covector& x : covectors) doc.push_back({{"sign", x.sign.to_string()}, {"witness", vector_json(x.witness)}});
    out << doc.dump() << "\n";
  } else {
    for (const Covector& x : covectors) out << x.sign.to_string() << " " << vector_text(x.witness) << "\n";
  }
  return kOk;
}

int cmd_biclosed(const Common& c, std::ostream& out) {
  require_format(c, {"text", "json"});
  const PointedArrangement pa = make_family(spec_of(c.source));
  const Arrangement& a = pa.arrangement();
  const auto sets = enumerate_biclosed(pa, c.bound);
  if (c.count) {
    out << sets.size() << "\n";
    return kOk;
  }
  json doc = json::array();
  for (HyperplaneSet s : sets) {
    const bool separable = is_separable(pa, s).has_value();
    if (c.format == "json") {
      doc.push_back({{"set", set_json(a, s)}, {"separable", separable}});
    } else {
      out << a.format_set(s) << (separable ? " separable" : " not-separable") << "\n";
    }
  }
  if (c.format == "json") out << doc.dump() << "\n";
  return kOk;
}

int cmd_circuits(const Common& c, std::ostream& out) {
  require_format(c, {"text", "json"});
  const PointedArrangement pa = make_family(spec_of(c.source));
  const Arrangement& a = pa.arrangement();
  if (c.count) {
    out << pa.circuits().size() << "\n";
    return kOk;
  }
  json doc = json::array();
  for (const Circuit& circ : pa.circuits()) {
    if (c.format == "json") {
      doc.push_back({{"support", set_json(a, circ.support())}, {"sign", circ.sign.to_string()}, {"coefficients", vector_json(circ.coeffs)}});
    } else {
      out << circ.sign.to_string() << " " << a.format_set(circ.support()) << " " << vector_text(circ.coeffs) << "\n";
    }
  }
  if (c.format == "json") out << doc.dump() << "\n";
  return kOk;
}

int cmd_flats(const Common& c, std::ostream& out) {
  require_format(c, {"text", "json"});
  const PointedArrangement pa = make_family(spec_of(c.source));
  const Arrangement& a = pa.arrangement();
  if (c.count) {
    out << pa.flats().size() << "\n";
    return kOk;
  }
  json doc = json::array();
  for (const Flat& x : pa.flats()) {
    if (c.format == "json") {
      json basis = json::array();
      for (const Vector& b : x.basis) basis.push_back(vector_json(b));
      doc.push_back({{"codim", x.codim}, {"hyperplanes", set_json(a, x.contains)}, {"basis", basis}});
    } else {
      out << "codim " << x.codim << " " << a.format_set(x.contains) << "\n";
    }
  }
  if (c.format == "json") out << doc.dump() << "\n";
  return kOk;
}

int cmd_poset(const Common& c, std::ostream& out) {
  const PointedArrangement pa = make_family(spec_of(c.source));
  const ChamberPoset poset(pa);
  if (c.count) {
    out << poset.size() << "\n";
  } else if (c.format == "dot") {
    out << poset_dot(pa, poset);
  } else if (c.format == "json") {
    out << poset_json(pa, poset) << "\n";
  } else {
    const Arrangement& a = pa.arrangement();
    for (std::size_t i = 0; i < poset.size(); ++i) {
      out << poset.chamber(i).to_string() << " rank " << poset.rank(i) << " covers";
      for (std::size_t j : poset.upper_covers(i)) out << " " << poset.chamber(j).to_string();
      out << "\n";
    }
    out << "lattice " << (poset.is_lattice() ? "yes" : "no") << ", W(c0) = " << a.format_set(walls(pa, pa.c0())) << "\n";
  }
  return kOk;
}

int cmd_closure(const Common& c, const std::string& set, const std::string& kind, std::ostream& out) {
  require_format(c, {"text", "json"});
  const PointedArrangement pa = make_family(spec_of(c.source));
  const Arrangement& a = pa.arrangement();
  HyperplaneSet input;
  if (set == "walls") {
    input = walls(pa, pa.c0());
  } else if (!set.empty()) {
    std::stringstream in(set);
    for (std::string label; std::getline(in, label, ',');) {
      const auto& labels = a.labels();
      const auto it = std::find(labels.begin(), labels.end(), label);
      if (it == labels.end()) throw Error(Errc::kParse, "unknown hyperplane label '" + label + "'");
      input.insert(static_cast<std::size_t>(it - labels.begin()));
    }
  }
  const ClosureReport report = closure(pa, input, kind == "convex" ? ClosureKind::kConvex : ClosureKind::kTwo);
  if (c.format == "json") {
    json doc = json::parse(closure_report_json(pa, report));
    doc["separable"] = is_separable(pa, report.closure).has_value();
    out << doc.dump() << "\n";
  } else {
    out << a.format_set(report.input) << " -> " << a.format_set(report.closure)
        << (is_separable(pa, report.closure) ? " separable" : " not-separable") << "\n";
    for (const ForcingStep& step : report.forcing_chain) {
      out << "  " << a.label(step.forced) << " forced by " << step.circuit.to_string() << "\n";
    }
  }
  return kOk;
}

SignVector target_of(const PointedArrangement& pa, const std::string& to) {
  if (to.empty()) return -pa.c0();
  SignVector d = SignVector::from_string(to);
  if (!pa.is_chamber(d)) throw Error(Errc::kNotAChamber, "'" + to + "' is not a chamber");
  return d;
}

int cmd_galleries(const Common& c, const std::string& to, std::ostream& out) {
  const PointedArrangement pa = make_family(spec_of(c.source));
  const Arrangement& a = pa.arrangement();
  const GalleryGraph g = build_gallery_graph(pa, pa.c0(), target_of(pa, to), c.bound);
  if (c.count) {
    out << g.galleries.size() << "\n";
  } else if (c.format == "dot") {
    out << gallery_graph_dot(pa, g);
  } else if (c.format == "json") {
    out << gallery_graph_json(pa, g) << "\n";
  } else {
    for (std::size_t r = 0; r < g.galleries.size(); ++r) {
      out << a.format_order(g.galleries[r].order) << " adjacent";
      for (std::size_t s : g.adjacency[r]) out << " " << a.format_order(g.galleries[s].order);
      out << "\n";
    }
  }
  return kOk;
}

int cmd_diameter(const Common& c, const std::string& to, std::ostream& out) {
  require_format(c, {"text", "json"});
  const PointedArrangement pa = make_family(spec_of(c.source));
  const GalleryGraph g = build_gallery_graph(pa, pa.c0(), target_of(pa, to), c.bound);
  const auto d = diameter(g);
  if (c.format == "json") {
    out << json{{"diameter", d ? json(*d) : json(nullptr)}, {"galleries", g.galleries.size()}, {"l2", pa.l2().size()}}.dump()
        << "\n";
  } else {
    out << (d ? std::to_string(*d) : std::string("disconnected")) << "\n";
  }
  return kOk;
}

int cmd_admissible(const Common& c, std::ostream& out) {
  require_format(c, {"text", "json"});
  const PointedArrangement pa = make_family(spec_of(c.source));
  const Arrangement& a = pa.arrangement();
  std::uint64_t perms = 1;
  for (std::size_t i = 2; i <= pa.size(); ++i) {
    perms *= i;
    if (perms > c.bound) throw Error(Errc::kBoundExceeded, std::to_string(pa.size()) + "! permutations exceed --bound " + std::to_string(c.bound));
  }
  const AdmissibilityOracle oracle(pa);
  std::vector<std::size_t> order(pa.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<std::size_t>> found;
  do {
    if (oracle.is_admissible(order)) found.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  if (c.count) {
    out << found.size() << "\n";
    return kOk;
  }
  json doc = json::array();
  for (const auto& o : found) {
    const bool realized = realize_admissible(pa, o).has_value();
    if (c.format == "json") {
      doc.push_back({{"order", a.format_order(o)}, {"gallery", realized}});
    } else {
      out << a.format_order(o) << (realized ? " gallery" : " not-gallery") << "\n";
    }
  }
  if (c.format == "json") out << doc.dump() << "\n";
  return kOk;
}

json flag_json(const Arrangement& a, const std::optional<ModularFlag>& flag) {
  if (!flag) return nullptr;
  json out = json::array();
  for (const Flat& x : flag->flats) out.push_back(set_json(a, x.contains));
  return out;
}

int cmd_supersolvable(const Common& c, std::ostream& out) {
  require_format(c, {"text", "json"});
  const PointedArrangement pa = make_family(spec_of(c.source));
  const Arrangement& a = pa.arrangement();
  const auto flag = is_supersolvable(a);
  const auto incident = incident_modular_flag(pa);
  if (c.format == "json") {
    out << json{{"supersolvable", flag.has_value()}, {"flag", flag_json(a, flag)}, {"incident_flag", flag_json(a, incident)}}.dump()
        << "\n";
    return kOk;
  }
  auto text = [&](const std::optional<ModularFlag>& f) {
    if (!f) return std::string("none");
    std::string s;
    for (const Flat& x : f->flats) s += (s.empty() ? "" : " < ") + a.format_set(x.contains);
    return s.empty() ? std::string("(rank <= 1)") : s;
  };
  out << (flag ? "supersolvable" : "not supersolvable") << "\n";
  out << "flag " << text(flag) << "\n";
  out << "flag incident to c0 " << text(incident) << "\n";
  return kOk;
}

int cmd_extension(const Common& c, std::ostream& out) {
  require_format(c, {"text", "json"});
  const PointedArrangement pa = make_family(spec_of(c.source));
  const Arrangement e = supersolvable_extension(pa.arrangement());
  if (c.count) {
    out << e.size() << "\n";
  } else if (c.format == "json") {
    out << arrangement_to_json(e) << "\n";
  } else {
    for (std::size_t h = 0; h < e.size(); ++h) {
      out << e.label(h) << " " << vector_text(e.normal(h)) << (h < pa.size() ? "" : " added") << "\n";
    }
  }
  return kOk;
}

void print_reports(const std::vector<CheckReport>& reports, const Common& c, bool timing, std::ostream& out) {
  if (c.format == "json") {
    json doc = json::array();
    for (const CheckReport& r : reports) doc.push_back(report_json(r, timing));
    out << doc.dump() << "\n";
    return;
  }
  for (const CheckReport& r : reports) {
    std::string status = status_name(r.status);
    std::transform(status.begin(), status.end(), status.begin(), [](unsigned char ch) { return std::toupper(ch); });
    out << status << " " << r.check << " " << r.fixture;
    if (timing) {
      std::ostringstream ms;
      ms.setf(std::ios::fixed);
      ms.precision(1);
      ms << r.millis;
      out << " " << ms.str() << "ms";
    }
    if (!r.note.empty()) out << " : " << r.note;
    out << "\n";
    if (r.status == CheckStatus::kFail) out << "  counterexample " << r.counterexample.dump() << "\n";
  }
}

int exit_for(const std::vector<CheckReport>& reports) {
  const bool failed = std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.status == CheckStatus::kFail; });
  return failed ? kCheckFailed : kOk;
}

int cmd_check(const Common& c, const std::vector<std::string>& selectors, bool all, bool force, bool timing,
              const std::vector<std::string>& fixture_texts, std::ostream& out) {
  require_format(c, {"text", "json"});
  std::vector<std::string> names = all ? check_names() : selectors;
  if (names.empty()) throw Error(Errc::kParse, "give --thm or --all");
  std::vector<FamilySpec> specs;
  for (const std::string& f : fixture_texts) specs.push_back(parse_fixture(f));
  if (specs.empty()) specs.push_back(spec_of(c.source));
  for (const std::string& name : names) {
    const std::string plain = name.rfind("thm-", 0) == 0 ? name.substr(4) : name;
    const auto& known = check_names();
    if (std::find(known.begin(), known.end(), plain) == known.end()) throw Error(Errc::kUnknownSelector, "unknown check '" + name + "'");
  }
  CheckOptions options;
  options.bound = c.bound;
  options.force = force;

  // Fixtures run in parallel; reports keep fixture order.
  std::vector<std::vector<CheckReport>> per(specs.size());
  std::vector<std::optional<Error>> errors(specs.size());
  const long count = static_cast<long>(specs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      const PointedArrangement pa = make_family(specs[i]);
      for (const std::string& name : names) per[i].push_back(run_check(name, pa, family_label(specs[i]), options));
    } catch (const Error& e) {
      errors[i] = e;
    }
  }
  for (const auto& e : errors) {
    if (e) throw *e;
  }
  std::vector<CheckReport> reports;
  for (auto& list : per) std::move(list.begin(), list.end(), std::back_inserter(reports));
  print_reports(reports, c, timing, out);
  return exit_for(reports);
}

int cmd_replay(const Common& c, const std::string& path, bool timing, std::ostream& out) {
  require_format(c, {"text", "json"});
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Error(Errc::kParse, "cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  json payload;
  try {
    payload = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::kParse, std::string("replay payload: ") + e.what());
  }
  // A whole report list replays every failure in it.
  std::vector<json> items;
  if (payload.is_array()) {
    for (const json& item : payload) {
      if (item.contains("counterexample") || item.contains("witness")) items.push_back(item);
    }
  } else {
    items.push_back(payload);
  }
  CheckOptions options;
  options.bound = c.bound;
  std::vector<CheckReport> reports;
  for (const json& item : items) reports.push_back(replay(item, options));
  print_reports(reports, c, timing, out);
  return exit_for(reports);
}

int exit_code_of(const Error& e) { return e.code() == Errc::kBoundExceeded ? kBound : kUsage; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on real central hyperplane arrangements", "hyparr"};
  app.require_subcommand(1);
  Common c;
  std::string closure_set;
  std::string closure_kind = "2";
  std::string to;
  std::vector<std::string> selectors;
  std::vector<std::string> fixtures;
  bool all = false;
  bool force = false;
  bool timing = false;
  std::string replay_path;

  auto* chambers = app.add_subcommand("chambers", "chambers with separation sets and interior points");
  auto* covectors = app.add_subcommand("covectors", "all faces as sign vectors");
  auto* biclosed = app.add_subcommand("biclosed", "biclosed subsets, marked separable or not");
  auto* circuits = app.add_subcommand("circuits", "signed circuits");
  auto* flats = app.add_subcommand("flats", "intersection lattice");
  auto* poset = app.add_subcommand("poset", "chamber poset P(A, c0)");
  auto* closure_cmd = app.add_subcommand("closure", "2-closure or convex closure with its forcing chain");
  auto* galleries = app.add_subcommand("galleries", "reduced galleries and the flip graph");
  auto* diameter_cmd = app.add_subcommand("diameter", "diameter of the gallery graph");
  auto* admissible = app.add_subcommand("admissible", "admissible permutations");
  auto* super = app.add_subcommand("supersolvable", "modular flag witnesses");
  auto* extension = app.add_subcommand("extension", "supersolvable extension of the same rank");
  auto* check = app.add_subcommand("check", "run property checks");
  auto* replay_cmd = app.add_subcommand("replay", "rerun the check recorded in a failure payload");
  for (auto* sub : {chambers, covectors, biclosed, circuits, flats, poset, closure_cmd, galleries, diameter_cmd, admissible,
                    super, extension, check, replay_cmd}) {
    add_source(sub, c);
  }
  closure_cmd->add_option("--set", closure_set, "comma separated labels, or 'walls' for W(c0)");
  closure_cmd->add_option("--kind", closure_kind, "2 or convex")->check(CLI::IsMember({"2", "convex"}));
  galleries->add_option("--to", to, "end chamber (default -c0)");
  diameter_cmd->add_option("--to", to, "end chamber (default -c0)");
  check->add_option("--thm", selectors, "check name, e.g. 1.1, thm-1.2, diameter; repeatable");
  check->add_flag("--all", all, "run every check");
  check->add_flag("--force", force, "run even when hypotheses fail");
  check->add_flag("--timing", timing, "include timings (output is then not byte-stable)");
  check->add_option("--fixture", fixtures, "name[:n[:d]], repeatable; overrides --family");
  replay_cmd->add_option("payload", replay_path, "failure payload or report JSON ('-' for stdin)")->required();
  replay_cmd->add_flag("--timing", timing, "include timings");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (chambers->parsed()) return cmd_chambers(c, out);
    if (covectors->parsed()) return cmd_covectors(c, out);
    if (biclosed->parsed()) return cmd_biclosed(c, out);
    if (circuits->parsed()) return cmd_circuits(c, out);
    if (flats->parsed()) return cmd_flats(c, out);
    if (poset->parsed()) return cmd_poset(c, out);
    if (closure_cmd->parsed()) return cmd_closure(c, closure_set, closure_kind, out);
    if (galleries->parsed()) return cmd_galleries(c, to, out);
    if (diameter_cmd->parsed()) return cmd_diameter(c, to, out);
    if (admissible->parsed()) return cmd_admissible(c, out);
    if (super->parsed()) return cmd_supersolvable(c, out);
    if (extension->parsed()) return cmd_extension(c, out);
    if (check->parsed()) return cmd_check(c, selectors, all, force, timing, fixtures, out);
    if (replay_cmd->parsed()) return cmd_replay(c, replay_path, timing, out);
  } catch (const Error& e) {
    err << "hyparr: " << e.what() << "\n";
    return exit_code_of(e);
  } catch (const std::exception& e) {
    err << "hyparr: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace hyparr::cli
