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

#ifndef ISALLOC_ALLOCATION_HPP
#define ISALLOC_ALLOCATION_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "isalloc/games.hpp"
#include "isalloc/graph.hpp"
#include "isalloc/property_report.hpp"
#include "isalloc/rational.hpp"
#include "isalloc/shapley.hpp"

namespace isalloc {

class InvalidTransactionCost : public std::invalid_argument {
 public:
  explicit InvalidTransactionCost(const Rational& value);
};

/// Collective transaction cost of the grand coalition. It is a single
/// positive scalar; there is no per-coalition cost function.
class TransactionCost {
 public:
  /// Throws InvalidTransactionCost unless total > 0.
  explicit TransactionCost(Rational total);
  const Rational& total() const noexcept { return total_; }

 private:
  Rational total_;
};

struct AllocationOptions {
  int precision = 2;
};

struct AllocationReport {
  std::vector<std::string> firms;
  std::vector<Rational> shares;
  std::vector<std::string> rendered;
  int precision = 2;
  ISIndexVector index;
  TransactionCost tc;
  AggregationWeights weights;
  /// sum(shares) - tc; exactly zero for every report this library produces.
  Rational efficiency_residual;
  /// Attached checker results, empty unless requested.
  std::vector<PropertyReport> checks;

  bool efficient() const { return sgn(efficiency_residual) == 0; }
  Rational share_total() const { return sum(shares); }
};

/// Cost shares T_i = Phi_i(sigma) * tau / (alpha + beta) from the closed-form
/// IS index. Polynomial in the number of firms.
AllocationReport allocate(const ISGraph& g, const TransactionCost& tc, const AggregationWeights& w = {},
                          const AllocationOptions& options = {});

/// Same report computed from brute-force Shapley values, dividing by the
/// aggregated game's own value on the grand coalition. Used to cross-check
/// allocate(). Throws EnumerationLimitExceeded above the limit.
AllocationReport allocate_exact_oracle(const ISGraph& g, const TransactionCost& tc, const AggregationWeights& w = {},
                                       const AllocationOptions& options = {},
                                       std::size_t limit = enumeration_limit());

/// Shares Phi_i(f) * tau / f(grand) for an arbitrary game, via enumeration.
/// Throws std::domain_error when f(grand) is zero.
std::vector<Rational> shares_from_game(const CharacteristicGame& game, const TransactionCost& tc,
                                       std::size_t limit = enumeration_limit());

}  // namespace isalloc

#endif  // ISALLOC_ALLOCATION_HPP
