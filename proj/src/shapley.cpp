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

#include "isalloc/shapley.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

namespace isalloc {

EnumerationLimitExceeded::EnumerationLimitExceeded(std::size_t firms, std::size_t limit)
    : std::runtime_error("EnumerationLimitExceeded: " + std::to_string(firms) +
                         " firms exceeds the exhaustive enumeration limit of " + std::to_string(limit)),
      firms_(firms),
      limit_(limit) {}

std::size_t enumeration_limit() {
  const char* env = std::getenv("ISALLOC_ENUM_LIMIT");
  if (env == nullptr) return kDefaultEnumerationLimit;
  std::string_view text(env);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return kDefaultEnumerationLimit;
  return std::clamp<std::size_t>(value, 1, 62);
}

std::vector<Rational> shapley_coefficients(std::size_t n) {
  std::vector<Rational> out;
  out.reserve(n);
  const Integer n_fact = factorial(static_cast<std::uint32_t>(n));
  for (std::size_t s = 0; s < n; ++s) {
    Rational c(factorial(static_cast<std::uint32_t>(s)) * factorial(static_cast<std::uint32_t>(n - s - 1)), n_fact);
    c.canonicalize();
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

void require_enumerable(std::size_t n, std::size_t limit) {
  if (n > limit || n > 62) throw EnumerationLimitExceeded(n, std::min<std::size_t>(limit, 62));
}

}  // namespace

Rational shapley_exact(const CharacteristicGame& game, std::size_t i, std::size_t limit) {
  const std::size_t n = game.firm_count();
  require_enumerable(n, limit);
  if (i >= n) throw std::out_of_range("shapley_exact: firm index out of range");

  const auto coeff = shapley_coefficients(n);
  const std::uint64_t others = game.grand().without(i).bits();
  Rational total = 0;
  // Walks every submask of `others`, including the empty one.
  std::uint64_t sub = others;
  while (true) {
    Coalition s(sub);
    total += coeff[s.size()] * (game(s.with(i)) - game(s));
    if (sub == 0) break;
    sub = (sub - 1) & others;
  }
  return total;
}

std::vector<Rational> shapley_exact_all(const CharacteristicGame& game, std::size_t limit) {
  const std::size_t n = game.firm_count();
  require_enumerable(n, limit);

  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<Rational> table(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) table[mask] = game(Coalition(mask));

  const auto coeff = shapley_coefficients(n);
  std::vector<Rational> out(n, Rational(0));
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Coalition s(mask);
    if (s.size() == n) continue;
    const Rational& c = coeff[s.size()];
    for (std::size_t i = 0; i < n; ++i) {
      if (s.contains(i)) continue;
      out[i] += c * (table[s.with(i).bits()] - table[mask]);
    }
  }
  return out;
}

Rational shapley_physical_closed(const ISGraph& g, std::size_t i) { return g.incident_weight(i) / 2; }

Rational shapley_institutional_closed(const ISGraph& g, std::size_t i) { return closeness_centrality(g, i); }

std::vector<Rational> ISIndexVector::sigma() const {
  std::vector<Rational> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.sigma);
  return out;
}

Rational ISIndexVector::sigma_total() const {
  Rational total = 0;
  for (const auto& e : entries_) total += e.sigma;
  return total;
}

ISIndexVector is_index(const ISGraph& g, const AggregationWeights& w) {
  const std::size_t n = g.size();
  const Rational physical_total = g.total_weight();
  const auto centralities = closeness_centralities(g);
  const Rational institutional_total = sum(centralities);

  std::vector<IndexComponents> entries;
  entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    IndexComponents e;
    e.physical = w.alpha() * shapley_physical_closed(g, i) / physical_total;
    e.institutional = w.beta() * centralities[i] / institutional_total;
    e.sigma = e.physical + e.institutional;
    entries.push_back(std::move(e));
  }
  return ISIndexVector(std::move(entries));
}

ISIndexVector is_index_exact(const ISGraph& g, const AggregationWeights& w, std::size_t limit) {
  require_enumerable(g.size(), limit);
  auto physical = shapley_exact_all(make_game(g, GameKind::NormalizedPhysical), limit);
  auto institutional = shapley_exact_all(make_game(g, GameKind::NormalizedInstitutional), limit);
  auto sigma = shapley_exact_all(make_game(g, GameKind::Aggregated, w), limit);

  std::vector<IndexComponents> entries;
  entries.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    entries.push_back({w.alpha() * physical[i], w.beta() * institutional[i], std::move(sigma[i])});
  }
  return ISIndexVector(std::move(entries));
}

}  // namespace isalloc
