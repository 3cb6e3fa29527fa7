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

#ifndef ISALLOC_GAMES_HPP
#define ISALLOC_GAMES_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "isalloc/coalition.hpp"
#include "isalloc/graph.hpp"
#include "isalloc/rational.hpp"

namespace isalloc {

enum class GameKind {
  Physical,
  Institutional,
  Aggregated,
  NormalizedPhysical,
  NormalizedInstitutional,
  Synthetic,
};

std::string_view to_string(GameKind kind);

/// Importance of the physical and institutional parts in the aggregated
/// game. Both must be strictly positive; (1, 1) is the plain sum.
class AggregationWeights {
 public:
  AggregationWeights() : alpha_(1), beta_(1) {}
  /// Throws std::invalid_argument unless alpha > 0 and beta > 0.
  AggregationWeights(Rational alpha, Rational beta);

  const Rational& alpha() const noexcept { return alpha_; }
  const Rational& beta() const noexcept { return beta_; }
  /// Value of the aggregated game on the grand coalition.
  Rational total() const { return alpha_ + beta_; }

 private:
  Rational alpha_;
  Rational beta_;
};

/// Transferable-utility game: a firm count and a value for every coalition.
/// Evaluators are pure and the empty coalition is always worth zero.
class CharacteristicGame {
 public:
  using Evaluator = std::function<Rational(Coalition)>;

  CharacteristicGame(std::size_t firm_count, GameKind kind, Evaluator evaluator);

  /// Wraps an arbitrary function; f(empty) is forced to 0.
  static CharacteristicGame synthetic(std::size_t firm_count, Evaluator evaluator);

  std::size_t firm_count() const noexcept { return firm_count_; }
  GameKind kind() const noexcept { return kind_; }
  Coalition grand() const noexcept { return Coalition::grand(firm_count_); }

  Rational operator()(Coalition s) const;
  Rational evaluate(Coalition s) const { return (*this)(s); }

 private:
  std::size_t firm_count_;
  GameKind kind_;
  Evaluator evaluator_;
};

/// Pointwise a*f + b*h on a shared firm set. Tagged synthetic.
CharacteristicGame linear_combination(const Rational& a, const CharacteristicGame& f, const Rational& b,
                                      const CharacteristicGame& h);

/// Sum of the weights of edges with both endpoints in `s`; 0 when |s| <= 1.
Rational physical_value(const ISGraph& g, Coalition s);

/// Sum of members' closeness centralities.
Rational institutional_value(const ISGraph& g, Coalition s);
Rational institutional_value(std::span<const Rational> centralities, Coalition s);

/// alpha * v(S)/v(all) + beta * iota(S)/iota(all).
Rational aggregated_value(const ISGraph& g, Coalition s, const AggregationWeights& w = {});

/// Builds an evaluator for one of the graph games. Centralities and grand
/// coalition totals are computed once and shared by the returned game.
/// Throws std::invalid_argument for GameKind::Synthetic or for graphs with
/// more firms than a Coalition can hold.
CharacteristicGame make_game(const ISGraph& g, GameKind kind, const AggregationWeights& w = {});

}  // namespace isalloc

#endif  // ISALLOC_GAMES_HPP
