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

#include "isalloc/verify.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace isalloc {
namespace {

void require_checkable(std::size_t n, std::size_t limit) {
  if (n > limit) throw EnumerationLimitExceeded(n, limit);
}

std::vector<Rational> tabulate(const CharacteristicGame& game) {
  const std::uint64_t count = std::uint64_t{1} << game.firm_count();
  std::vector<Rational> table(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) table[mask] = game(Coalition(mask));
  return table;
}

PropertyReport start(std::string property, const CharacteristicGame& game) {
  PropertyReport r;
  r.property = std::move(property);
  r.subject = std::string(to_string(game.kind())) + " game";
  return r;
}

void fail(PropertyReport& r, std::vector<Coalition> coalitions, std::string relation, Rational lhs, Rational rhs,
          std::vector<std::size_t> firms = {}) {
  r.holds = false;
  r.counterexample = Counterexample{std::move(coalitions), std::move(firms), std::move(relation), std::move(lhs),
                                    std::move(rhs)};
}

// Sum of allocation entries over every coalition, by extending one member at
// a time.
std::vector<Rational> subset_sums(std::span<const Rational> values) {
  const std::uint64_t count = std::uint64_t{1} << values.size();
  std::vector<Rational> sums(count);
  sums[0] = 0;
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    auto low = static_cast<std::size_t>(std::countr_zero(mask));
    sums[mask] = sums[mask & (mask - 1)] + values[low];
  }
  return sums;
}

}  // namespace

PropertyReport check_monotonicity(const CharacteristicGame& game, std::size_t limit) {
  require_checkable(game.firm_count(), limit);
  auto r = start("monotonicity", game);
  const auto f = tabulate(game);
  const std::uint64_t count = f.size();
  for (std::uint64_t t = 0; t < count; ++t) {
    if (t == 0) continue;
    for (std::uint64_t s = (t - 1) & t;; s = (s - 1) & t) {
      ++r.instances_checked;
      if (f[s] > f[t]) {
        fail(r, {Coalition(s), Coalition(t)}, "f(S) <= f(T)", f[s], f[t]);
        return r;
      }
      if (s == 0) break;
    }
  }
  return r;
}

PropertyReport check_superadditivity(const CharacteristicGame& game, std::size_t limit) {
  require_checkable(game.firm_count(), limit);
  auto r = start("superadditivity", game);
  const auto f = tabulate(game);
  const std::uint64_t grand = game.grand().bits();
  for (std::uint64_t s = 0; s <= grand; ++s) {
    const std::uint64_t rest = grand & ~s;
    for (std::uint64_t t = rest;; t = (t - 1) & rest) {
      ++r.instances_checked;
      Rational rhs = f[s] + f[t];
      if (f[s | t] < rhs) {
        fail(r, {Coalition(s), Coalition(t)}, "f(S|T) >= f(S) + f(T)", f[s | t], std::move(rhs));
        return r;
      }
      if (t == 0) break;
    }
  }
  return r;
}

namespace {

PropertyReport scan_pairs(std::string property, std::string relation, const CharacteristicGame& game,
                          std::size_t limit, bool require_equality) {
  require_checkable(game.firm_count(), limit);
  auto r = start(std::move(property), game);
  const auto f = tabulate(game);
  const std::uint64_t count = f.size();
  Rational lhs, rhs;
  for (std::uint64_t s = 0; s < count; ++s) {
    for (std::uint64_t t = s; t < count; ++t) {
      ++r.instances_checked;
      lhs = f[s | t] + f[s & t];
      rhs = f[s] + f[t];
      if (require_equality ? lhs != rhs : lhs < rhs) {
        fail(r, {Coalition(s), Coalition(t)}, relation, lhs, rhs);
        return r;
      }
    }
  }
  return r;
}

}  // namespace

PropertyReport check_convexity(const CharacteristicGame& game, std::size_t limit) {
  return scan_pairs("convexity", "f(S|T) + f(S&T) >= f(S) + f(T)", game, limit, false);
}

PropertyReport check_modularity(const CharacteristicGame& game, std::size_t limit) {
  return scan_pairs("convexity-equality", "f(S|T) + f(S&T) == f(S) + f(T)", game, limit, true);
}

PropertyReport check_core(const CharacteristicGame& game, std::span<const Rational> allocation, std::size_t limit) {
  const std::size_t n = game.firm_count();
  require_checkable(n, limit);
  if (allocation.size() != n) throw std::invalid_argument("check_core: allocation size does not match firm count");
  auto r = start("core", game);

  const auto sums = subset_sums(allocation);
  const Coalition grand = game.grand();
  ++r.instances_checked;
  Rational grand_value = game(grand);
  if (sums[grand.bits()] != grand_value) {
    fail(r, {grand}, "sum_{i in N} a_i == f(N)", sums[grand.bits()], std::move(grand_value));
    return r;
  }
  for (std::uint64_t mask = 0; mask < sums.size(); ++mask) {
    ++r.instances_checked;
    Rational value = game(Coalition(mask));
    if (sums[mask] < value) {
      fail(r, {Coalition(mask)}, "sum_{i in S} a_i >= f(S)", sums[mask], std::move(value));
      return r;
    }
  }
  return r;
}

PropertyReport check_efficiency(const AllocationReport& report) {
  PropertyReport r;
  r.property = "efficiency";
  r.subject = "allocation";
  r.instances_checked = 1;
  Rational total = report.share_total();
  if (total != report.tc.total() || !report.efficient()) {
    fail(r, {}, "sum_i T_i == tau", std::move(total), report.tc.total());
  }
  return r;
}

PropertyReport check_symmetry(const ISGraph& g, const TransactionCost& tc, const AggregationWeights& w,
                              std::size_t limit) {
  const std::size_t n = g.size();
  require_checkable(n, limit);
  const auto game = make_game(g, GameKind::Aggregated, w);
  auto r = start("symmetry", game);
  const auto f = tabulate(game);
  const auto report = allocate(g, tc, w);
  const std::uint64_t grand = game.grand().bits();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint64_t bi = std::uint64_t{1} << i;
      const std::uint64_t bj = std::uint64_t{1} << j;
      const std::uint64_t rest = grand & ~(bi | bj);
      bool interchangeable = true;
      for (std::uint64_t s = rest;; s = (s - 1) & rest) {
        if (f[s | bi] != f[s | bj]) {
          interchangeable = false;
          break;
        }
        if (s == 0) break;
      }
      if (!interchangeable) continue;
      ++r.instances_checked;
      if (report.shares[i] != report.shares[j]) {
        fail(r, {}, "T_i == T_j", report.shares[i], report.shares[j], {i, j});
        return r;
      }
    }
  }
  return r;
}

PropertyReport check_dummy_player(const CharacteristicGame& game, const TransactionCost& tc, std::size_t limit) {
  const std::size_t n = game.firm_count();
  require_checkable(n, limit);
  auto r = start("dummy-player", game);
  const auto f = tabulate(game);
  const std::uint64_t grand = game.grand().bits();
  const Rational& grand_value = f[grand];
  std::vector<Rational> shares;

  for (std::size_t d = 0; d < n; ++d) {
    const std::uint64_t bd = std::uint64_t{1} << d;
    const std::uint64_t rest = grand & ~bd;
    bool dummy = true;
    for (std::uint64_t s = rest;; s = (s - 1) & rest) {
      if (f[s | bd] != f[s] + f[bd]) {
        dummy = false;
        break;
      }
      if (s == 0) break;
    }
    if (!dummy) continue;
    if (shares.empty()) shares = shares_from_game(game, tc, limit);
    ++r.instances_checked;
    Rational expected = f[bd] * tc.total() / grand_value;
    if (shares[d] != expected) {
      fail(r, {Coalition(bd)}, "T_d == f({d}) * tau / f(N)", shares[d], std::move(expected), {d});
      return r;
    }
  }
  return r;
}

CharacteristicGame with_dummy_firm(const ISGraph& g, const AggregationWeights& w, const Rational& dummy_value) {
  const std::size_t n = g.size();
  if (n + 1 > Coalition::kMaxFirms) throw std::invalid_argument("with_dummy_firm: too many firms");
  auto sigma = make_game(g, GameKind::Aggregated, w);
  return CharacteristicGame::synthetic(n + 1, [sigma, n, dummy_value](Coalition s) -> Rational {
    Rational value = sigma(s.without(n));
    if (s.contains(n)) value += dummy_value;
    return value;
  });
}

PropertyReport check_additivity(const ISGraph& g, const TransactionCost& tc, const ISGraph& other,
                                const TransactionCost& other_tc, const AggregationWeights& w, std::size_t limit) {
  if (g.firms() != other.firms()) throw std::invalid_argument("check_additivity: graphs must share the same firm list");
  require_checkable(g.size(), limit);

  auto sigma = make_game(g, GameKind::Aggregated, w);
  auto sigma_other = make_game(other, GameKind::Aggregated, w);
  auto combined = linear_combination(1, sigma, 1, sigma_other);
  const auto lhs = shares_from_game(combined, TransactionCost(tc.total() + other_tc.total()), limit);
  const auto first = allocate(g, tc, w);
  const auto second = allocate(other, other_tc, w);

  auto r = start("additivity", combined);
  r.subject = "sum of two aggregated games";
  for (std::size_t i = 0; i < g.size(); ++i) {
    ++r.instances_checked;
    Rational rhs = first.shares[i] + second.shares[i];
    if (lhs[i] != rhs) {
      fail(r, {}, "T_i(sigma+sigma', tau+tau') == T_i(sigma, tau) + T_i(sigma', tau')", lhs[i], std::move(rhs), {i});
      return r;
    }
  }
  return r;
}

std::vector<PropertyReport> check_fairness_axioms(const ISGraph& g, const TransactionCost& tc,
                                                  const AggregationWeights& w, const ISGraph* additivity_partner) {
  require_checkable(g.size(), kFairnessCheckLimit);
  std::vector<PropertyReport> out;
  out.push_back(check_efficiency(allocate(g, tc, w)));
  out.push_back(check_symmetry(g, tc, w));
  // The dummy game has one firm more than g.
  out.push_back(check_dummy_player(with_dummy_firm(g, w, 1), tc, kFairnessCheckLimit + 1));
  if (additivity_partner != nullptr) out.push_back(check_additivity(g, tc, *additivity_partner, tc, w));
  return out;
}

PropertyReport check_stability(const AllocationReport& report) {
  PropertyReport r;
  r.property = "stability";
  r.subject = "allocation";
  const Rational& tau = report.tc.total();
  const std::size_t n = report.shares.size();

  ++r.instances_checked;
  Rational total = report.share_total();
  if (total != tau || !report.efficient()) {
    fail(r, {}, "sum_i T_i == tau", std::move(total), tau);
    return r;
  }

  if (n <= kExhaustiveCheckLimit) {
    const auto sums = subset_sums(report.shares);
    for (std::uint64_t mask = 0; mask < sums.size(); ++mask) {
      if (std::popcount(mask) < 2) continue;
      ++r.instances_checked;
      if (sums[mask] > tau) {
        fail(r, {Coalition(mask)}, "sum_{i in S} T_i <= tau", sums[mask], tau);
        return r;
      }
    }
    return r;
  }

  // The largest coalition sum over |S| >= 2 takes every positive share, or
  // the two largest shares when fewer than two are positive.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return report.shares[a] > report.shares[b]; });
  std::vector<std::size_t> members;
  Rational best = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational& share = report.shares[order[k]];
    if (k >= 2 && sgn(share) <= 0) break;
    members.push_back(order[k]);
    best += share;
  }
  ++r.instances_checked;
  if (best > tau) {
    std::sort(members.begin(), members.end());
    fail(r, {}, "sum_{i in S} T_i <= tau", std::move(best), tau, std::move(members));
  }
  return r;
}

}  // namespace isalloc
