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

#include "isalloc/allocation.hpp"

#include <cassert>
#include <utility>

namespace isalloc {

InvalidTransactionCost::InvalidTransactionCost(const Rational& value)
    : std::invalid_argument("InvalidTransactionCost: transaction cost must be positive, got " +
                            to_fraction_string(value)) {}

TransactionCost::TransactionCost(Rational total) : total_(std::move(total)) {
  total_.canonicalize();
  if (sgn(total_) <= 0) throw InvalidTransactionCost(total_);
}

namespace {

AllocationReport build_report(const ISGraph& g, ISIndexVector index, const Rational& divisor, const TransactionCost& tc,
                              const AggregationWeights& w, const AllocationOptions& options) {
  AllocationReport report{g.firms(), {}, {}, options.precision, std::move(index), tc, w, Rational(0), {}};
  report.shares.reserve(g.size());
  report.rendered.reserve(g.size());
  for (const auto& entry : report.index.entries()) {
    Rational share = entry.sigma * tc.total() / divisor;
    report.rendered.push_back(render_decimal(share, options.precision));
    report.shares.push_back(std::move(share));
  }
  report.efficiency_residual = report.share_total() - tc.total();
  return report;
}

}  // namespace

AllocationReport allocate(const ISGraph& g, const TransactionCost& tc, const AggregationWeights& w,
                          const AllocationOptions& options) {
  // Both normalized games are worth 1 on the grand coalition.
  const Rational divisor = w.total();
  assert(g.size() > Coalition::kMaxFirms || aggregated_value(g, Coalition::grand(g.size()), w) == divisor);
  return build_report(g, is_index(g, w), divisor, tc, w, options);
}

AllocationReport allocate_exact_oracle(const ISGraph& g, const TransactionCost& tc, const AggregationWeights& w,
                                       const AllocationOptions& options, std::size_t limit) {
  auto index = is_index_exact(g, w, limit);
  const Rational divisor = make_game(g, GameKind::Aggregated, w)(Coalition::grand(g.size()));
  return build_report(g, std::move(index), divisor, tc, w, options);
}

std::vector<Rational> shares_from_game(const CharacteristicGame& game, const TransactionCost& tc, std::size_t limit) {
  const Rational grand_value = game(game.grand());
  if (sgn(grand_value) == 0) throw std::domain_error("shares_from_game: game is worth zero on the grand coalition");
  auto phi = shapley_exact_all(game, limit);
  for (auto& p : phi) p = p * tc.total() / grand_value;
  return phi;
}

}  // namespace isalloc
