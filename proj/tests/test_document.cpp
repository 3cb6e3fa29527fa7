// Copyright 2026 The isalloc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"
#include "isalloc/document.hpp"
#include "isalloc/generator.hpp"
#include "isalloc/report.hpp"
#include "oracles.hpp"

using namespace isalloc;

namespace {

std::vector<DocumentDiagnostic> diagnostics_of(std::string_view text) {
  try {
    parse_graph_document(text);
  } catch (const DocumentError& e) {
    return e.diagnostics();
  }
  return {};
}

}  // namespace

TEST_CASE("weights in every accepted notation") {
  auto raw = parse_graph_document(R"({"format_version": "1", "firms": ["a", "b", "c"],
    "edges": [{"a": "a", "b": "b", "w": "0.25"}, {"a": "b", "b": "c", "w": "3/4"}, {"a": "a", "b": "c", "w": 2}]})");
  REQUIRE(raw.edges.size() == 3);
  CHECK(raw.edges[0].weight == Rational(1, 4));
  CHECK(raw.edges[1].weight == Rational(3, 4));
  CHECK(raw.edges[2].weight == 2);
}

TEST_CASE("binary floating point weights are refused") {
  auto d = diagnostics_of(R"({"format_version": "1", "firms": ["a", "b"], "edges": [{"a": "a", "b": "b", "w": 0.1}]})");
  REQUIRE(d.size() == 1);
  CHECK(d[0].location == "edges[0].w");
}

TEST_CASE("malformed JSON reports line and column") {
  auto d = diagnostics_of("{\n  \"firms\": [\"a\",\n  ]\n}");
  REQUIRE(d.size() == 1);
  CHECK(d[0].location.rfind("line 3", 0) == 0);
}

TEST_CASE("all field problems are listed") {
  auto d = diagnostics_of(R"({"format_version": 2, "firms": ["a", 7], "edges": [{"a": "a", "w": "x"}, 5]})");
  std::vector<std::string> where;
  for (const auto& x : d) where.push_back(x.location);
  CHECK(where == std::vector<std::string>{"format_version", "firms[1]", "edges[0].b", "edges[0].w", "edges[1]"});
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(load_graph_document("/nonexistent/graph.json"), DocumentError);
}

TEST_CASE("documents round-trip through to_document") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    GraphGenSpec spec{2 + seed % 9, 0.4, isalloc::Rational(1, 7), 5, seed, {}};
    auto g = generate_graph(spec);
    auto again = isalloc::testing::must_validate(parse_graph_document(to_document(g).dump()));
    CHECK(to_document(again).dump() == to_document(g).dump());
  }
}

TEST_CASE("report JSON carries exact fractions") {
  auto report = allocate(isalloc::testing::fig1(), TransactionCost(100));
  auto j = to_json(report);
  CHECK(j["shares_exact"][3] == "573650/17459");
  CHECK(j["shares_rendered"][3] == "32.86");
  CHECK(j["tau"] == "100/1");
  CHECK(j["efficiency_residual"] == "0/1");
  CHECK(j["index"][0]["sigma"] == "13309/34918");
  CHECK(j["index"][0]["physical"] == "7/34");
  CHECK_FALSE(j.contains("checks"));
  // Every exact value parses back to the report's rational.
  for (std::size_t i = 0; i < report.shares.size(); ++i) {
    CHECK(*parse_rational(j["shares_exact"][i].get<std::string>()) == report.shares[i]);
  }
}

TEST_CASE("table renderer") {
  auto table = render_table(allocate(isalloc::testing::fig1(), TransactionCost(100)));
  CHECK(table.find("total  100.01  100/1") != std::string::npos);
  CHECK(table.find("efficiency residual 0/1") != std::string::npos);
  CHECK(render_columns({{"a", "bb"}, {"ccc", "d"}}) == "a    bb\nccc  d\n");
}
