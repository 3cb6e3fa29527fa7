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
#include "isalloc/generator.hpp"
#include "isalloc/verify.hpp"
#include "oracles.hpp"

using namespace isalloc;
using namespace isalloc::testing;

namespace {

CharacteristicGame by_size(std::size_t n, std::vector<Rational> values) {
  return CharacteristicGame::synthetic(n, [values](Coalition s) { return values[s.size()]; });
}

ISGraph random_graph(std::size_t n, std::uint64_t seed, std::vector<std::string> ids = {}) {
  GraphGenSpec spec;
  spec.firm_count = n;
  spec.seed = seed;
  spec.firm_ids = std::move(ids);
  return generate_graph(spec);
}

}  // namespace

TEST_CASE("monotonicity") {
  auto g = fig1();
  auto r = check_monotonicity(make_game(g, GameKind::Physical));
  CHECK(r.holds);
  CHECK(r.instances_checked == 729 - 64);  // strict inclusions among 6 firms
  CHECK(check_monotonicity(make_game(g, GameKind::Aggregated)).holds);

  // f({a}) = 5, f({a,b}) = 3.
  auto f = CharacteristicGame::synthetic(2, [](Coalition s) { return s.size() == 2 ? Rational(3) : Rational(s.contains(0) ? 5 : 0); });
  auto bad = check_monotonicity(f);
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.counterexample);
  const auto& c = *bad.counterexample;
  CHECK(c.coalitions[0] == Coalition{0});
  CHECK(c.coalitions[1] == Coalition{0, 1});
  CHECK(f(c.coalitions[0]) == c.lhs);
  CHECK(f(c.coalitions[1]) == c.rhs);
  CHECK(c.lhs > c.rhs);
}

TEST_CASE("superadditivity") {
  CHECK(check_superadditivity(make_game(fig1(), GameKind::Physical)).holds);
  auto modular = CharacteristicGame::synthetic(4, [](Coalition s) { return Rational(static_cast<long>(s.bits())); });
  CHECK(check_superadditivity(modular).holds);
  CHECK(check_modularity(modular).holds);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = random_graph(2 + seed % 6, seed);
    CHECK(check_superadditivity(make_game(g, GameKind::Physical)).holds);
  }

  auto sub = by_size(3, fractions({"0", "2", "3", "3"}));
  auto r = check_superadditivity(sub);
  CHECK_FALSE(r.holds);
  const auto& c = *r.counterexample;
  CHECK(sub(c.coalitions[0] | c.coalitions[1]) == c.lhs);
  CHECK(sub(c.coalitions[0]) + sub(c.coalitions[1]) == c.rhs);
}

TEST_CASE("convexity") {
  auto g = fig1();
  CHECK(check_modularity(make_game(g, GameKind::Institutional)).holds);
  CHECK(check_convexity(make_game(g, GameKind::Aggregated)).holds);
  CHECK(check_convexity(make_game(g, GameKind::Physical)).holds);
  // The physical game is convex but not modular once two edges share a firm.
  CHECK_FALSE(check_modularity(make_game(g, GameKind::Physical)).holds);

  auto concave = by_size(3, fractions({"0", "3", "5", "6"}));
  auto r = check_convexity(concave);
  CHECK_FALSE(r.holds);
  const auto& c = *r.counterexample;
  Coalition s = c.coalitions[0], t = c.coalitions[1];
  CHECK(concave(s | t) + concave(s & t) == c.lhs);
  CHECK(concave(s) + concave(t) == c.rhs);
  CHECK(c.lhs < c.rhs);
}

TEST_CASE("core membership") {
  auto g = fig1();
  auto sigma = make_game(g, GameKind::Aggregated);
  CHECK(check_core(sigma, is_index(g).sigma()).holds);

  // Equal split of v(N) on the physical game.
  auto v = make_game(g, GameKind::Physical);
  std::vector<Rational> equal(6, Rational(17, 3));
  auto r = check_core(v, equal);
  CHECK_FALSE(r.holds);
  const auto& c = *r.counterexample;
  Rational paid = 0;
  for (auto i : c.coalitions[0].members()) paid += equal[i];
  CHECK(paid == c.lhs);
  CHECK(v(c.coalitions[0]) == c.rhs);
  CHECK(c.lhs < c.rhs);

  auto two = must_validate(raw_graph({"A", "B"}, {{"A", "B", "10"}}));
  CHECK(check_core(make_game(two, GameKind::Physical), fractions({"10", "0"})).holds);
  auto inefficient = check_core(make_game(two, GameKind::Physical), fractions({"4", "5"}));
  CHECK_FALSE(inefficient.holds);
  CHECK(inefficient.counterexample->coalitions[0] == Coalition{0, 1});
}

TEST_CASE("symmetry on symmetric graphs") {
  auto square = cycle(4, "3");
  auto report = allocate(square, TransactionCost(100));
  for (const auto& s : report.shares) CHECK(s == 25);
  auto r = check_symmetry(square, TransactionCost(100));
  CHECK(r.holds);
  CHECK(r.instances_checked == 2);  // the two opposite pairs

  auto k5 = complete(5);
  auto rk = check_symmetry(k5, TransactionCost(7));
  CHECK(rk.holds);
  CHECK(rk.instances_checked == 10);
}

TEST_CASE("dummy player on a constructed game") {
  auto g = fig1();
  auto game = with_dummy_firm(g, {}, 1);
  CHECK(game.firm_count() == 7);
  auto r = check_dummy_player(game, TransactionCost(100), 7);
  CHECK(r.holds);
  CHECK(r.instances_checked == 1);
  auto shares = shares_from_game(game, TransactionCost(100), 7);
  CHECK(shares[6] == Rational(100, 3));  // f({d}) * tau / f(N) = 1 * 100 / 3
}

TEST_CASE("additivity") {
  auto g = fig1();
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    auto other = random_graph(6, seed, g.firms());
    auto r = check_additivity(g, TransactionCost(100), other, TransactionCost(100));
    CHECK(r.holds);
    CHECK(r.instances_checked == 6);
  }

  // With different costs the identity fails by (Phi - Phi')(tau' - tau) / 4.
  auto other = random_graph(6, 5, g.firms());
  auto r = check_additivity(g, TransactionCost(100), other, TransactionCost(40));
  REQUIRE_FALSE(r.holds);
  const auto& c = *r.counterexample;
  std::size_t i = c.firms.at(0);
  Rational gap = (is_index(g)[i].sigma - is_index(other)[i].sigma) * (40 - 100) / 4;
  CHECK(c.lhs - c.rhs == gap);

  auto stranger = random_graph(6, 1, {"a", "b", "c", "d", "e", "f"});
  CHECK_THROWS_AS(check_additivity(g, TransactionCost(1), stranger, TransactionCost(1)), std::invalid_argument);
}

TEST_CASE("fairness axiom bundle") {
  auto g = fig1();
  auto partner = random_graph(6, 17, g.firms());
  auto reports = check_fairness_axioms(g, TransactionCost(100), {}, &partner);
  REQUIRE(reports.size() == 4);
  for (const auto& r : reports) {
    CAPTURE(r.property);
    CHECK(r.holds);
  }
  CHECK(check_fairness_axioms(g, TransactionCost(100)).size() == 3);
  CHECK_THROWS_AS(check_fairness_axioms(random_graph(11, 1), TransactionCost(1)), EnumerationLimitExceeded);
}

TEST_CASE("stability") {
  auto report = allocate(fig1(), TransactionCost(100));
  const auto before = report.shares;
  CHECK(check_stability(report).holds);
  CHECK(report.shares == before);

  auto tampered = report;
  tampered.shares[0] += 1;
  tampered.efficiency_residual = tampered.share_total() - tampered.tc.total();
  auto r = check_stability(tampered);
  CHECK_FALSE(r.holds);
  CHECK(r.counterexample->lhs == 101);
  CHECK(r.counterexample->rhs == 100);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = random_graph(2 + seed % 7, seed);
    CHECK(check_stability(allocate(g, TransactionCost(Rational(static_cast<long>(seed) + 1, 7)))).holds);
  }
}

TEST_CASE("stability above the exhaustive limit uses the maximising coalition") {
  auto g = random_graph(30, 4);
  auto report = allocate(g, TransactionCost(1));
  CHECK(check_stability(report).holds);

  // Efficient but with a negative share: the positive shares exceed tau.
  auto skewed = report;
  skewed.shares[0] = skewed.shares[0] + 1;
  skewed.shares[1] = skewed.shares[1] - 1;
  auto r = check_stability(skewed);
  CHECK_FALSE(r.holds);
  Rational replay = 0;
  for (auto i : r.counterexample->firms) replay += skewed.shares[i];
  CHECK(replay == r.counterexample->lhs);
}

TEST_CASE("checkers enforce their enumeration limit") {
  auto big = make_game(random_graph(13, 3), GameKind::Physical);
  CHECK_THROWS_AS(check_monotonicity(big), EnumerationLimitExceeded);
  CHECK_THROWS_AS(check_convexity(big), EnumerationLimitExceeded);
  CHECK_THROWS_AS(check_core(big, std::vector<Rational>(13)), EnumerationLimitExceeded);
}
