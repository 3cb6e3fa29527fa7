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

#ifndef ISALLOC_VERIFY_HPP
#define ISALLOC_VERIFY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "isalloc/allocation.hpp"
#include "isalloc/games.hpp"
#include "isalloc/graph.hpp"
#include "isalloc/property_report.hpp"

// Exhaustive checkers for the game properties and allocation axioms. Every
// checker is read-only: it evaluates the game or report it is given and
// returns a PropertyReport whose counterexample (if any) can be replayed.
namespace isalloc {

/// Largest firm count for the coalition-pair scans.
inline constexpr std::size_t kExhaustiveCheckLimit = 12;
/// Largest firm count for the fairness axiom bundle.
inline constexpr std::size_t kFairnessCheckLimit = 10;

/// f(S) <= f(T) for every S strictly inside T.
PropertyReport check_monotonicity(const CharacteristicGame& game, std::size_t limit = kExhaustiveCheckLimit);

/// f(S | T) >= f(S) + f(T) for every disjoint pair.
PropertyReport check_superadditivity(const CharacteristicGame& game, std::size_t limit = kExhaustiveCheckLimit);

/// f(S | T) + f(S & T) >= f(S) + f(T) for every pair.
PropertyReport check_convexity(const CharacteristicGame& game, std::size_t limit = kExhaustiveCheckLimit);

/// Convexity with equality on every pair (a modular game).
PropertyReport check_modularity(const CharacteristicGame& game, std::size_t limit = kExhaustiveCheckLimit);

/// Efficiency plus coalitional rationality sum_{i in S} a_i >= f(S).
PropertyReport check_core(const CharacteristicGame& game, std::span<const Rational> allocation,
                          std::size_t limit = kExhaustiveCheckLimit);

/// Shares sum to the transaction cost exactly.
PropertyReport check_efficiency(const AllocationReport& report);

/// For every pair of firms interchangeable in the aggregated game, their
/// shares are equal.
PropertyReport check_symmetry(const ISGraph& g, const TransactionCost& tc, const AggregationWeights& w = {},
                              std::size_t limit = kFairnessCheckLimit);

/// For every firm whose marginal contribution always equals its stand-alone
/// value, the Shapley-based share equals f({d}) * tau / f(grand).
PropertyReport check_dummy_player(const CharacteristicGame& game, const TransactionCost& tc,
                                  std::size_t limit = kFairnessCheckLimit);

/// Appends a firm to the aggregated game of `g` whose contribution is always
/// `dummy_value`; the constructed premise for the dummy-player axiom, which
/// cannot occur inside a valid IS graph.
CharacteristicGame with_dummy_firm(const ISGraph& g, const AggregationWeights& w, const Rational& dummy_value);

/**
 * Additivity of the cost shares over two institutions on the same firms.
 *
 * Left side: shares of the pointwise sum game sigma + sigma' with cost
 * tau + tau', from brute-force Shapley values. Right side: allocate(g, tc)
 * plus allocate(other, other_tc). The two agree for every firm exactly when
 * tau == tau' or both graphs induce the same index; otherwise they differ by
 * (Phi_i(sigma) - Phi_i(sigma')) (tau' - tau) / (2 (alpha + beta)), and the
 * report carries that firm as a counterexample.
 *
 * Throws std::invalid_argument if the firm lists differ.
 */
PropertyReport check_additivity(const ISGraph& g, const TransactionCost& tc, const ISGraph& other,
                                const TransactionCost& other_tc, const AggregationWeights& w = {},
                                std::size_t limit = kFairnessCheckLimit);

/// Efficiency, symmetry, dummy player (on with_dummy_firm(g, w, 1)) and,
/// when a partner graph on the same firms is given, additivity with the
/// same cost for both.
std::vector<PropertyReport> check_fairness_axioms(const ISGraph& g, const TransactionCost& tc,
                                                  const AggregationWeights& w = {},
                                                  const ISGraph* additivity_partner = nullptr);

/// Efficiency residual is zero and sum_{i in S} T_i <= tau for every S with
/// |S| >= 2. Exhaustive up to kExhaustiveCheckLimit firms; above that the
/// maximising coalition (all positive shares, or the two largest) is checked.
PropertyReport check_stability(const AllocationReport& report);

}  // namespace isalloc

#endif  // ISALLOC_VERIFY_HPP
