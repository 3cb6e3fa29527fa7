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

#ifndef ISALLOC_SHAPLEY_HPP
#define ISALLOC_SHAPLEY_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "isalloc/games.hpp"
#include "isalloc/graph.hpp"
#include "isalloc/rational.hpp"

namespace isalloc {

inline constexpr std::size_t kDefaultEnumerationLimit = 20;

/// Raised by every exponential path when the firm count is above the
/// configured limit. Callers should fall back to the closed form.
class EnumerationLimitExceeded : public std::runtime_error {
 public:
  EnumerationLimitExceeded(std::size_t firms, std::size_t limit);
  std::size_t firms() const noexcept { return firms_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t firms_;
  std::size_t limit_;
};

/// Limit for brute-force Shapley enumeration. ISALLOC_ENUM_LIMIT overrides
/// the default of 20; values are clamped to [1, 62].
std::size_t enumeration_limit();

/// |S|! (n-|S|-1)! / n! for |S| = 0..n-1.
std::vector<Rational> shapley_coefficients(std::size_t n);

/// Shapley value of firm `i` by summing weighted marginal contributions over
/// every coalition not containing `i` (2^(n-1) terms, two evaluations each).
Rational shapley_exact(const CharacteristicGame& game, std::size_t i, std::size_t limit = enumeration_limit());

/// Shapley values of all firms. Tabulates the game once (2^n evaluations).
std::vector<Rational> shapley_exact_all(const CharacteristicGame& game, std::size_t limit = enumeration_limit());

/// Half the weight incident to `i`: the Shapley value in the physical game.
Rational shapley_physical_closed(const ISGraph& g, std::size_t i);

/// Closeness centrality of `i`: the Shapley value in the institutional game.
Rational shapley_institutional_closed(const ISGraph& g, std::size_t i);

struct IndexComponents {
  Rational physical;       // alpha-scaled Shapley value in the normalized physical game
  Rational institutional;  // beta-scaled Shapley value in the normalized institutional game
  Rational sigma;

  bool operator==(const IndexComponents&) const = default;
};

/// Per-firm IS index with its two components.
class ISIndexVector {
 public:
  ISIndexVector() = default;
  explicit ISIndexVector(std::vector<IndexComponents> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  const IndexComponents& operator[](std::size_t i) const { return entries_.at(i); }
  const std::vector<IndexComponents>& entries() const noexcept { return entries_; }

  std::vector<Rational> sigma() const;
  Rational sigma_total() const;

  bool operator==(const ISIndexVector&) const = default;

 private:
  std::vector<IndexComponents> entries_;
};

/// Closed-form IS index in O(n (n + m)): reads only weight rows and
/// centralities and never evaluates a coalition.
ISIndexVector is_index(const ISGraph& g, const AggregationWeights& w = {});

/// Same vector by brute-force enumeration of the normalized physical,
/// normalized institutional and aggregated games. `sigma` comes from the
/// aggregated game itself, not from adding the other two columns.
ISIndexVector is_index_exact(const ISGraph& g, const AggregationWeights& w = {},
                             std::size_t limit = enumeration_limit());

}  // namespace isalloc

#endif  // ISALLOC_SHAPLEY_HPP
