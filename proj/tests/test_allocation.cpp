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
#include "isalloc/allocation.hpp"
#include "isalloc/generator.hpp"
#include "oracles.hpp"

using namespace isalloc;
using namespace isalloc::testing;

TEST_CASE("case-study allocation with tau = 100") {
  auto report = allocate(fig1(), TransactionCost(100));
  CHECK(report.rendered == std::vector<std::string>{"19.06", "12.08", "13.55", "32.86", "9.76", "12.70"});
  CHECK(report.shares[3] == Rational(573650, 17459));
  CHECK(report.share_total() == 100);
  CHECK(sgn(report.efficiency_residual) == 0);
  CHECK(report.efficient());

  // The rounded shares do not add up to the cost; the exact ones do.
  Rational rendered_total = 0;
  for (const auto& r : report.rendered) rendered_total += *parse_rational(r);
  CHECK(rendered_total == Rational(10001, 100));
}

TEST_CASE("two-firm and 3-path allocations") {
  auto two = must_validate(raw_graph({"A", "B"}, {{"A", "B", "10"}}));
  auto r2 = allocate(two, TransactionCost(100));
  CHECK(r2.shares == fractions({"50", "50"}));
  CHECK(r2.rendered == std::vector<std::string>{"50.00", "50.00"});

  auto r3 = allocate(path3(), TransactionCost(100));
  CHECK(r3.shares == fractions({"650/21", "325/7", "475/21"}));
}

TEST_CASE("transaction cost must be positive") {
  CHECK_THROWS_AS(TransactionCost(0), InvalidTransactionCost);
  CHECK_THROWS_AS(TransactionCost(Rational(-1, 2)), InvalidTransactionCost);
  CHECK_NOTHROW(TransactionCost(Rational(1, 1000)));
}

TEST_CASE("oracle report equals the closed-form report") {
  auto g = fig1();
  auto fast = allocate(g, TransactionCost(100));
  auto slow = allocate_exact_oracle(g, TransactionCost(100));
  CHECK(fast.shares == slow.shares);
  CHECK(fast.rendered == slow.rendered);
  CHECK(fast.index == slow.index);

  AggregationWeights w(2, 3);
  auto weighted = allocate(g, TransactionCost(100), w);
  CHECK(weighted.shares == allocate_exact_oracle(g, TransactionCost(100), w).shares);
  CHECK(weighted.shares == fractions({"327380/17459", "222270/17459", "242810/17459", "544600/17459",
                                      "183880/17459", "224960/17459"}));
  CHECK(weighted.share_total() == 100);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GraphGenSpec spec;
    spec.firm_count = 7;
    spec.seed = seed;
    auto r = generate_graph(spec);
    CHECK(allocate(r, TransactionCost(1)).shares == allocate_exact_oracle(r, TransactionCost(1)).shares);
  }
}

TEST_CASE("shares scale linearly with the cost") {
  auto g = fig1();
  auto base = allocate(g, TransactionCost(100));
  for (const Rational& k : fractions({"1/3", "2", "17/5", "1000"})) {
    auto scaled = allocate(g, TransactionCost(100 * k));
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(scaled.shares[i] == k * base.shares[i]);
      CHECK(scaled.shares[i] / scaled.tc.total() == base.shares[i] / 100);
    }
  }
}

TEST_CASE("rendering precision is configurable") {
  auto r = allocate(fig1(), TransactionCost(100), {}, AllocationOptions{4});
  CHECK(r.rendered[0] == "19.0575");
  auto r0 = allocate(fig1(), TransactionCost(100), {}, AllocationOptions{0});
  CHECK(r0.rendered[3] == "33");
}

TEST_CASE("shares_from_game rejects games worth zero overall") {
  auto zero = CharacteristicGame::synthetic(3, [](Coalition) { return Rational(0); });
  CHECK_THROWS_AS(shares_from_game(zero, TransactionCost(1)), std::domain_error);
}
