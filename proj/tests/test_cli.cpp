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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "hyparr/families.hpp"
#include "hyparr/io.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = hyparr::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("counts") {
    CHECK(run({"chambers", "--family", "figure2", "--count"}).out == "14\n");
    CHECK(run({"biclosed", "--family", "figure2", "--count"}).out == "16\n");
    CHECK(run({"diameter", "--family", "braid", "--n", "4"}).out == "7\n");
    CHECK(run({"galleries", "--family", "figure2-quad", "--count"}).out == "16\n");
    CHECK(run({"admissible", "--family", "figure2-quad", "--count"}).out == "24\n");
    CHECK(run({"circuits", "--family", "braid", "--n", "4", "--count"}).out == "7\n");
    CHECK(run({"chambers", "--family", "cyclic-generic", "--n", "5", "--d", "3", "--count"}).out == "22\n");
  }

  TEST_CASE("checks and exit codes") {
    const Result pass = run({"check", "--thm", "1.1", "--family", "braid", "--n", "4"});
    CHECK(pass.code == 0);
    CHECK(pass.out.rfind("PASS 1.1 braid(4)", 0) == 0);
    const Result skipped = run({"check", "--thm", "1.2", "--family", "figure2"});
    CHECK(skipped.code == 0);
    CHECK(skipped.out.rfind("SKIPPED 1.2 figure2", 0) == 0);
    CHECK(skipped.out.find("{A,B,C}") != std::string::npos);
    const Result all = run({"check", "--all", "--family", "figure1"});
    CHECK(all.code == 0);
    CHECK(all.out.find("FAIL") == std::string::npos);
    CHECK(run({"check", "--thm", "nope", "--family", "figure1"}).code == 2);
    CHECK(run({"chambers", "--famly", "figure1"}).code == 2);
    CHECK(run({"chambers"}).code == 2);
    CHECK(run({"biclosed", "--family", "braid", "--n", "6", "--bound", "1000"}).code == 3);
    CHECK(run({"chambers", "--family", "figure2", "--c0", "+++-"}).code == 2);
    CHECK(run({"poset", "--family", "figure1", "--format", "svg"}).code == 2);
  }

  TEST_CASE("bound from the environment") {
    setenv("HYPARR_BOUND", "10", 1);
    CHECK(run({"biclosed", "--family", "braid", "--n", "4", "--count"}).code == 3);
    CHECK(run({"biclosed", "--family", "braid", "--n", "4", "--count", "--bound", "100"}).code == 0);
    unsetenv("HYPARR_BOUND");
  }

  TEST_CASE("failure payloads replay") {
    const Result forced = run({"check", "--thm", "1.1", "--family", "figure2", "--force", "--format", "json"});
    CHECK(forced.code == 1);
    const auto reports = nlohmann::json::parse(forced.out);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0]["status"] == "fail");
    const std::string path = temp_file("hyparr_replay.json", forced.out);
    const Result again = run({"replay", path});
    CHECK(again.code == 1);
    CHECK(again.out.rfind("FAIL 1.1 figure2", 0) == 0);
    const std::string single = temp_file("hyparr_replay_one.json", reports[0]["counterexample"].dump());
    CHECK(run({"replay", single}).code == 1);
  }

  TEST_CASE("outputs are byte-stable") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"chambers", "--family", "typeB", "--n", "3", "--format", "json"},
          {"poset", "--family", "figure2", "--format", "dot"},
          {"galleries", "--family", "figure2-quad", "--format", "json"},
          {"check", "--all", "--fixture", "braid:3", "--fixture", "figure2", "--format", "json"}}) {
      CHECK(run(args).out == run(args).out);
    }
  }

  TEST_CASE("json output keeps rationals exact") {
    const auto doc = nlohmann::json::parse(run({"chambers", "--family", "figure2", "--format", "json"}).out);
    REQUIRE(doc.size() == 14);
    for (const auto& c : doc) {
      for (const auto& x : c["witness"]) CHECK(x.is_string());
    }
    const auto ext = nlohmann::json::parse(run({"extension", "--family", "figure2", "--format", "json"}).out);
    CHECK(ext["hyperplanes"].size() == 5);
    CHECK(ext["hyperplanes"][0][0] == "1");
  }

  TEST_CASE("file input") {
    const std::string good = temp_file("hyparr_cli_good.json", hyparr::arrangement_to_json(hyparr::figure2().arrangement()));
    CHECK(run({"chambers", "--file", good, "--count"}).out == "14\n");
    const std::string bad = temp_file("hyparr_cli_bad.json", "{\n  \"dim\": 3,\n  \"hyperplanes\": [[1,0,0] [0,1,0]]\n}\n");
    const Result r = run({"chambers", "--file", bad});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);
  }

  TEST_CASE("closure and supersolvable reports") {
    const Result c = run({"closure", "--family", "figure2", "--set", "walls"});
    CHECK(c.out.rfind("{A,B,C} -> {A,B,C} not-separable", 0) == 0);
    const auto j = nlohmann::json::parse(run({"closure", "--family", "figure1", "--set", "1,3", "--format", "json"}).out);
    CHECK(j["closure"].size() == 3);
    const auto s = nlohmann::json::parse(run({"supersolvable", "--family", "braid", "--n", "4", "--format", "json"}).out);
    CHECK(s["supersolvable"] == true);
    CHECK(s["flag"].size() == 2);
    const auto f = nlohmann::json::parse(run({"supersolvable", "--family", "figure2", "--format", "json"}).out);
    CHECK(f["supersolvable"] == false);
  }
}
