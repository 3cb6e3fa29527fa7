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

#include <random>

#include "doctest.h"
#include "isalloc/generator.hpp"
#include "isalloc/shapley.hpp"
#include "oracles.hpp"

using namespace isalloc;
using namespace isalloc::testing;

namespace {

// Random game with integer values in [-20, 20] (f(empty) forced to 0).
CharacteristicGame random_game(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto table = std::make_shared<std::vector<Rational>>();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) table->push_back(Rational(static_cast<long>(rng() % 41) - 20));
  return CharacteristicGame::synthetic(n, [table](Coalition s) { return (*table)[s.bits()]; });
}

}  // namespace

TEST_CASE("coefficients weight every coalition exactly once in total") {
  for (std::size_t n = 1; n <= 12; ++n) {
    auto c = shapley_coefficients(n);
    Rational total = 0;
    for (std::size_t s = 0; s < n; ++s) {
      Integer choose;
      mpz_bin_uiui(choose.get_mpz_t(), n - 1, s);
      total += c[s] * choose;
    }
    CHECK(total == 1);
  }
}

TEST_CASE("3-path physical game") {
  auto g = path3();
  auto v = make_game(g, GameKind::Physical);
  auto expected = fractions({"2", "3", "1"});
  CHECK(shapley_by_permutations(v, 3) == expected);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(shapley_exact(v, i) == expected[i]);
    CHECK(shapley_physical_closed(g, i) == expected[i]);
  }
  CHECK(shapley_exact_all(v) == expected);
}

TEST_CASE("case-study physical and institutional values") {
  auto g = fig1();
  auto vbar = make_game(g, GameKind::NormalizedPhysical);
  CHECK(shapley_exact(vbar, 3) == Rational(7, 17));

  auto closed = fractions({"7", "3", "4", "14", "2", "4"});
  auto v = make_game(g, GameKind::Physical);
  auto iota = make_game(g, GameKind::Institutional);
  auto exact_v = shapley_exact_all(v);
  auto exact_iota = shapley_exact_all(iota);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(shapley_physical_closed(g, i) == closed[i]);
    CHECK(exact_v[i] == closed[i]);
    CHECK(shapley_institutional_closed(g, i) == exact_iota[i]);
  }
  CHECK(shapley_institutional_closed(g, 3) == 1);
  CHECK(shapley_by_permutations(iota, 6) == exact_iota);
}

TEST_CASE("leaf firm receives half its only edge") {
  auto g = must_validate(raw_graph({"hub", "leaf", "x"}, {{"hub", "leaf", "7/3"}, {"hub", "x", "1"}}));
  CHECK(shapley_physical_closed(g, 1) == Rational(7, 6));
  auto two = must_validate(raw_graph({"A", "B"}, {{"A", "B", "3"}}));
  CHECK(shapley_institutional_closed(two, 0) == 1);
  CHECK(shapley_institutional_closed(two, 1) == 1);
}

TEST_CASE("additive game pays every firm its own value") {
  auto c = fractions({"3", "-1/2", "0", "7"});
  auto f = CharacteristicGame::synthetic(4, [c](Coalition s) {
    Rational total = 0;
    for (auto i : s.members()) total += c[i];
    return total;
  });
  for (std::size_t i = 0; i < 4; ++i) CHECK(shapley_exact(f, i) == c[i]);
}

TEST_CASE("IS index on the case study") {
  auto index = is_index(fig1());
  CHECK(index.sigma() ==
        fractions({"13309/34918", "4218/17459", "9463/34918", "11473/17459", "3407/17459", "4434/17459"}));
  CHECK(index[0].physical == Rational(7, 34));
  CHECK(index[0].institutional == Rational(5, 7) / Rational(1027, 252));
  CHECK(index.sigma_total() == 2);
  CHECK(is_index_exact(fig1()) == index);

  AggregationWeights w(2, 3);
  auto weighted = is_index(fig1(), w);
  CHECK(weighted.sigma_total() == 5);
  CHECK(is_index_exact(fig1(), w) == weighted);
}

TEST_CASE("IS index on small symmetric and path graphs") {
  auto square = is_index(cycle(4, "5"));
  for (std::size_t i = 0; i < 4; ++i) CHECK(square[i].sigma == Rational(1, 2));

  auto path = is_index(path3());
  auto expected = fractions({"13/21", "13/14", "19/42"});
  CHECK(path.sigma() == expected);
  auto sigma = make_game(path3(), GameKind::Aggregated);
  CHECK(shapley_by_permutations(sigma, 3) == expected);
}

TEST_CASE("closed forms equal enumeration on random graphs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    GraphGenSpec spec;
    spec.firm_count = 2 + rng() % 7;
    spec.edge_density = 0.2 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
    spec.weight_min = Rational(1, 3);
    spec.weight_max = 9;
    spec.seed = rng();
    auto g = generate_graph(spec);
    auto v = shapley_exact_all(make_game(g, GameKind::Physical));
    auto iota = shapley_exact_all(make_game(g, GameKind::Institutional));
    for (std::size_t i = 0; i < g.size(); ++i) {
      REQUIRE(shapley_physical_closed(g, i) == v[i]);
      REQUIRE(shapley_institutional_closed(g, i) == iota[i]);
    }
    auto index = is_index(g);
    CHECK(index == is_index_exact(g));
    for (const auto& e : index.entries()) {
      CHECK(sgn(e.physical) > 0);
      CHECK(sgn(e.institutional) > 0);
      CHECK(e.sigma == e.physical + e.institutional);
    }
  }
}

TEST_CASE("shapley_exact agrees with the permutation definition on arbitrary games") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::size_t n = 1 + seed % 6;
    auto f = random_game(n, seed);
    auto by_orders = shapley_by_permutations(f, n);
    auto all = shapley_exact_all(f);
    Rational total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(shapley_exact(f, i) == by_orders[i]);
      CHECK(all[i] == by_orders[i]);
      total += all[i];
    }
    CHECK(total == f(f.grand()));  // efficiency of the value
  }
}

TEST_CASE("shapley value is linear") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    std::size_t n = 2 + seed % 5;
    auto f = random_game(n, seed * 2 + 1);
    auto h = random_game(n, seed * 2 + 2);
    Rational a(static_cast<long>(seed) + 1, 3);
    Rational b(-2, static_cast<long>(seed) + 1);
    a.canonicalize();
    b.canonicalize();
    auto combined = shapley_exact_all(linear_combination(a, f, b, h));
    auto sf = shapley_exact_all(f);
    auto sh = shapley_exact_all(h);
    for (std::size_t i = 0; i < n; ++i) CHECK(combined[i] == a * sf[i] + b * sh[i]);
  }
}

TEST_CASE("relabelling firms permutes the index vector") {
  auto g = fig1();
  std::vector<std::size_t> perm{2, 0, 5, 1, 4, 3};
  RawGraph raw;
  raw.firms.resize(6);
  for (std::size_t i = 0; i < 6; ++i) raw.firms[perm[i]] = g.firm(i);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j : g.neighbors(i))
      if (j > i) raw.edges.push_back({g.firm(i), g.firm(j), g.weight(i, j)});
  auto a = is_index(g);
  auto b = is_index(must_validate(raw));
  for (std::size_t i = 0; i < 6; ++i) CHECK(b[perm[i]] == a[i]);
}

TEST_CASE("enumeration limit") {
  auto g = fig1();
  CHECK_THROWS_AS(shapley_exact(make_game(g, GameKind::Physical), 0, 5), EnumerationLimitExceeded);
  CHECK_THROWS_AS(shapley_exact_all(make_game(g, GameKind::Physical), 5), EnumerationLimitExceeded);
  CHECK_THROWS_AS(is_index_exact(g, {}, 5), EnumerationLimitExceeded);
  CHECK_NOTHROW(shapley_exact(make_game(g, GameKind::Physical), 0, 6));
  CHECK(enumeration_limit() >= 1);
}
