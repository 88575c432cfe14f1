// Copyright 2026 The gammahom Authors
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

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "gammahom/gammahom.hpp"
#include "json.hpp"

using namespace gammahom;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("gammahom_test_" + name);
}

}  // namespace

TEST_CASE("compute renders a table and JSON", "[cli]") {
  const Run t = run({"compute", "--space", "t:circle", "--ring", "z", "--max-degree", "2"});
  REQUIRE(t.code == cli::kPass);
  REQUIRE(t.out.find("Z") != std::string::npos);

  const Run j = run({"compute", "--space", "t:circle", "--ring", "z", "--max-degree", "2",
                     "--format", "json"});
  REQUIRE(j.code == cli::kPass);
  const json doc = json::parse(j.out);
  REQUIRE(doc["schema_version"] == 1);
  REQUIRE(doc["kind"] == "stable_result");
  REQUIRE(doc["degrees"][0]["value"]["group"] == "0");
  REQUIRE(doc["degrees"][1]["value"]["group"] == "Z");
  REQUIRE(doc["degrees"][2]["value"]["group"] == "0");

  const Run c = run({"compute", "--space", "ab:2", "--ring", "f2", "--max-degree", "1",
                     "--format", "csv"});
  REQUIRE(c.code == cli::kPass);
  REQUIRE(c.out.rfind("degree,group,rank", 0) == 0);
}

TEST_CASE("usage errors exit with 2", "[cli]") {
  REQUIRE(run({}).code == cli::kUsage);
  REQUIRE(run({"compute"}).code == cli::kUsage);
  REQUIRE(run({"compute", "--space", "nonsense"}).code == cli::kUsage);
  REQUIRE(run({"compute", "--space", "ab:2", "--ring", "f4"}).code == cli::kUsage);
  REQUIRE(run({"compute", "--space", "ab:2", "--format", "xml"}).code == cli::kUsage);
  REQUIRE(run({"check", "--suite", "everything", "--space", "ab:2"}).code == cli::kUsage);
  REQUIRE(run({"frobnicate"}).code == cli::kUsage);
  const Run bad = run({"compute", "--space", "wedge(ab:2"});
  REQUIRE(bad.err.find("position") != std::string::npos);
}

TEST_CASE("budget exhaustion exits with 3", "[cli]") {
  const Run r = run({"compute", "--space", "ab:2", "--ring", "f2", "--max-degree", "3",
                     "--cell-budget", "200"});
  REQUIRE(r.code == cli::kBudget);
  REQUIRE(r.err.find("unstable above degree") != std::string::npos);
  REQUIRE(run({"dump", "--space", "ab:2", "--level", "3", "--max-degree", "6",
               "--cell-budget", "100"}).code == cli::kBudget);
}

TEST_CASE("special suite reports the sphere as not special", "[cli]") {
  const Run r = run({"check", "--suite", "special", "--space", "sphere"});
  REQUIRE(r.code == cli::kPass);
  REQUIRE(r.out.find("not special") != std::string::npos);
  const Run j = run({"check", "--suite", "special", "--space", "ab:2", "--format", "json"});
  REQUIRE(j.code == cli::kPass);
  REQUIRE(json::parse(j.out)["reports"][0]["passed"] == true);
}

TEST_CASE("dump examples", "[cli][dump]") {
  auto ranks = [](const std::string& space, const std::string& level) {
    const Run r = run({"dump", "--space", space, "--level", level, "--max-degree", "3"});
    REQUIRE(r.code == cli::kPass);
    return json::parse(r.out)["ranks"].get<std::vector<std::size_t>>();
  };
  // Nerve of Z/2: one normalized cell in each positive degree.
  REQUIRE(ranks("ab:2", "1") == std::vector<std::size_t>{0, 1, 1, 1, 1});
  // U(B T(S^0)) is the circle.
  REQUIRE(ranks("t:s0", "1") == std::vector<std::size_t>{0, 1, 0, 0, 0});
  REQUIRE(ranks("point", "1") == std::vector<std::size_t>{0, 0, 0, 0, 0});
}

TEST_CASE("dumped complexes round-trip", "[cli][dump]") {
  for (const char* space : {"ab:2", "t:circle", "ab:3", "sigma(ab:2)"}) {
    const Run r = run({"dump", "--space", space, "--level", "2", "--max-degree", "4"});
    REQUIRE(r.code == cli::kPass);
    const ChainComplex c = complex_from_json(r.out);
    const NormalizedChains chains(spectrum_level(parse_space(space), 2));
    const auto direct = level_homology(chains, Ring::integers(), 0, 4);
    const HomologyTable back = homology(c, 4);
    INFO(space);
    for (int d = 0; d <= 4; ++d) REQUIRE(*back.groups[d] == direct[d]);
  }
}

TEST_CASE("output is identical across thread counts", "[cli][determinism]") {
  const std::vector<std::string> base{"dump", "--space", "ab:2", "--level", "2", "--max-degree", "6"};
  auto with_threads = [&](const char* t) {
    auto args = base;
    args.insert(args.end(), {"--threads", t});
    return run(args).out;
  };
  REQUIRE(with_threads("1") == with_threads("3"));
}

TEST_CASE("config file and output file", "[cli]") {
  const auto config = temp_file("config.json");
  const auto out = temp_file("out.json");
  {
    std::ofstream f(config);
    f << R"({"space": "t:circle", "ring": "z", "max_degree": 2, "format": "json"})";
  }
  const Run r = run({"compute", "--config", config.string(), "--out", out.string()});
  REQUIRE(r.code == cli::kPass);
  REQUIRE(r.out.empty());
  std::ifstream in(out);
  const json doc = json::parse(in);
  REQUIRE(doc["space"] == "T(S)");
  REQUIRE(doc["degrees"].size() == 3);

  // Flags override the file.
  const Run o = run({"compute", "--config", config.string(), "--max-degree", "1"});
  REQUIRE(json::parse(o.out)["degrees"].size() == 2);

  {
    std::ofstream f(config);
    f << R"({"space": "t:circle", "colour": "blue"})";
  }
  REQUIRE(run({"compute", "--config", config.string()}).code == cli::kUsage);
  std::filesystem::remove(config);
  std::filesystem::remove(out);
}
