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

#include "hyparr/io.hpp"

#include <fstream>
#include <sstream>

#include "hyparr/error.hpp"
#include "json.hpp"

namespace hyparr {
namespace {

using nlohmann::json;

std::string position(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Rational entry(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error&) {
      throw Error(Errc::kParse, where + ": invalid rational '" + v.get<std::string>() + "'");
    }
  }
  if (v.is_number_integer()) return Rational(v.dump());
  throw Error(Errc::kParse, where + ": expected a rational string such as \"3/7\"");
}

}  // namespace

ArrangementFile parse_arrangement_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character.
    throw Error(Errc::kParse, position(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!doc.is_object()) throw Error(Errc::kParse, "top level must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_unsigned()) {
    throw Error(Errc::kParse, "\"dim\" must be a non-negative integer");
  }
  if (!doc.contains("hyperplanes") || !doc["hyperplanes"].is_array()) {
    throw Error(Errc::kParse, "\"hyperplanes\" must be an array");
  }
  const std::size_t dim = doc["dim"].get<std::size_t>();
  std::vector<Vector> normals;
  for (std::size_t i = 0; i < doc["hyperplanes"].size(); ++i) {
    const json& row = doc["hyperplanes"][i];
    const std::string where = "hyperplanes[" + std::to_string(i) + "]";
    if (!row.is_array()) throw Error(Errc::kParse, where + " must be an array");
    Vector v;
    for (std::size_t j = 0; j < row.size(); ++j) v.push_back(entry(row[j], where + "[" + std::to_string(j) + "]"));
    normals.push_back(std::move(v));
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw Error(Errc::kParse, "\"labels\" must be an array of strings");
    for (const json& l : doc["labels"]) {
      if (!l.is_string()) throw Error(Errc::kParse, "\"labels\" must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  if (!labels.empty() && labels.size() != normals.size()) {
    throw Error(Errc::kLengthMismatch, "\"labels\" has " + std::to_string(labels.size()) + " entries for " +
                                           std::to_string(normals.size()) + " hyperplanes");
  }
  ArrangementFile out{build_arrangement(dim, std::move(normals), std::move(labels)), std::nullopt};
  if (doc.contains("fundamental_chamber")) {
    if (!doc["fundamental_chamber"].is_string()) throw Error(Errc::kParse, "\"fundamental_chamber\" must be a string");
    SignVector c0 = SignVector::from_string(doc["fundamental_chamber"].get<std::string>());
    if (c0.size() != out.arrangement.size()) {
      throw Error(Errc::kLengthMismatch, "fundamental_chamber has length " + std::to_string(c0.size()));
    }
    out.fundamental_chamber = c0;
  }
  return out;
}

ArrangementFile read_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kParse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_arrangement_json(buf.str());
}

std::string arrangement_to_json(const Arrangement& a, const std::optional<SignVector>& c0) {
  json doc;
  doc["dim"] = a.dim();
  doc["hyperplanes"] = json::array();
  for (std::size_t h = 0; h < a.size(); ++h) {
    json row = json::array();
    for (const Rational& q : a.normal(h)) row.push_back(format_rational(q));
    doc["hyperplanes"].push_back(row);
  }
  doc["labels"] = a.labels();
  if (c0) doc["fundamental_chamber"] = c0->to_string();
  return doc.dump();
}

std::string poset_dot(const PointedArrangement& pa, const ChamberPoset& poset) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n  node [shape=box, fontname=monospace];\n";
  for (std::size_t i = 0; i < poset.size(); ++i) {
    out << "  c" << i << " [label=\"" << poset.chamber(i).to_string() << "\\n"
        << pa.arrangement().format_set(poset.sep(i)) << "\"];\n";
  }
  for (std::size_t i = 0; i < poset.size(); ++i) {
    for (std::size_t j : poset.upper_covers(i)) out << "  c" << i << " -> c" << j << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string poset_json(const PointedArrangement& pa, const ChamberPoset& poset) {
  json doc;
  doc["chambers"] = json::array();
  doc["covers"] = json::array();
  for (std::size_t i = 0; i < poset.size(); ++i) {
    json labels = json::array();
    poset.sep(i).for_each([&](std::size_t h) { labels.push_back(pa.arrangement().label(h)); });
    doc["chambers"].push_back({{"sign", poset.chamber(i).to_string()}, {"separation", labels}, {"rank", poset.rank(i)}});
    for (std::size_t j : poset.upper_covers(i)) doc["covers"].push_back({i, j});
  }
  doc["bottom"] = poset.bottom();
  doc["top"] = poset.top();
  doc["lattice"] = poset.is_lattice();
  return doc.dump();
}

}  // namespace hyparr
