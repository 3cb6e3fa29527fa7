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

#include "isalloc/games.hpp"

#include <utility>

namespace isalloc {

std::string to_string(Coalition s, const std::vector<std::string>* firm_ids) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : s.members()) {
    if (!first) out += ",";
    first = false;
    out += firm_ids != nullptr && i < firm_ids->size() ? (*firm_ids)[i] : std::to_string(i);
  }
  return out + "}";
}

std::string_view to_string(GameKind kind) {
  switch (kind) {
    case GameKind::Physical: return "physical";
    case GameKind::Institutional: return "institutional";
    case GameKind::Aggregated: return "aggregated";
    case GameKind::NormalizedPhysical: return "normalized-physical";
    case GameKind::NormalizedInstitutional: return "normalized-institutional";
    case GameKind::Synthetic: return "synthetic";
  }
  return "unknown";
}

AggregationWeights::AggregationWeights(Rational alpha, Rational beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  alpha_.canonicalize();
  beta_.canonicalize();
  if (sgn(alpha_) <= 0 || sgn(beta_) <= 0) {
    throw std::invalid_argument("aggregation weights must be positive, got alpha=" + to_fraction_string(alpha_) +
                                " beta=" + to_fraction_string(beta_));
  }
}

CharacteristicGame::CharacteristicGame(std::size_t firm_count, GameKind kind, Evaluator evaluator)
    : firm_count_(firm_count), kind_(kind), evaluator_(std::move(evaluator)) {
  if (firm_count_ > Coalition::kMaxFirms) {
    throw std::invalid_argument("coalition games support at most " + std::to_string(Coalition::kMaxFirms) +
                                " firms");
  }
}

CharacteristicGame CharacteristicGame::synthetic(std::size_t firm_count, Evaluator evaluator) {
  return CharacteristicGame(firm_count, GameKind::Synthetic, std::move(evaluator));
}

Rational CharacteristicGame::operator()(Coalition s) const {
  if (s.empty()) return 0;
  Rational value = evaluator_(s);
  value.canonicalize();
  return value;
}

CharacteristicGame linear_combination(const Rational& a, const CharacteristicGame& f, const Rational& b,
                                      const CharacteristicGame& h) {
  if (f.firm_count() != h.firm_count()) {
    throw std::invalid_argument("linear_combination: games are defined on different firm sets");
  }
  return CharacteristicGame::synthetic(f.firm_count(), [a, f, b, h](Coalition s) -> Rational {
    return a * f(s) + b * h(s);
  });
}

Rational physical_value(const ISGraph& g, Coalition s) {
  Rational total = 0;
  if (s.size() <= 1) return total;
  auto members = s.members();
  for (std::size_t x = 0; x < members.size(); ++x) {
    for (std::size_t y = x + 1; y < members.size(); ++y) total += g.weight(members[x], members[y]);
  }
  return total;
}

Rational institutional_value(std::span<const Rational> centralities, Coalition s) {
  Rational total = 0;
  for (std::size_t i : s.members()) total += centralities[i];
  return total;
}

Rational institutional_value(const ISGraph& g, Coalition s) {
  Rational total = 0;
  for (std::size_t i : s.members()) total += closeness_centrality(g, i);
  return total;
}

Rational aggregated_value(const ISGraph& g, Coalition s, const AggregationWeights& w) {
  auto centralities = closeness_centralities(g);
  Rational iota_total = sum(centralities);
  return w.alpha() * physical_value(g, s) / g.total_weight() +
         w.beta() * institutional_value(centralities, s) / iota_total;
}

namespace {

struct GraphGameData {
  ISGraph graph;
  std::vector<Rational> centralities;
  Rational physical_total;
  Rational institutional_total;
};

}  // namespace

CharacteristicGame make_game(const ISGraph& g, GameKind kind, const AggregationWeights& w) {
  if (kind == GameKind::Synthetic) throw std::invalid_argument("make_game: synthetic games need an evaluator");
  if (g.size() > Coalition::kMaxFirms) {
    throw std::invalid_argument("make_game: graph has " + std::to_string(g.size()) + " firms, coalition games support at most " +
                                std::to_string(Coalition::kMaxFirms));
  }

  GraphGameData built{g, closeness_centralities(g), g.total_weight(), Rational(0)};
  built.institutional_total = sum(built.centralities);
  auto data = std::make_shared<const GraphGameData>(std::move(built));

  CharacteristicGame::Evaluator eval;
  switch (kind) {
    case GameKind::Physical:
      eval = [data](Coalition s) { return physical_value(data->graph, s); };
      break;
    case GameKind::Institutional:
      eval = [data](Coalition s) { return institutional_value(data->centralities, s); };
      break;
    case GameKind::NormalizedPhysical:
      eval = [data](Coalition s) -> Rational { return physical_value(data->graph, s) / data->physical_total; };
      break;
    case GameKind::NormalizedInstitutional:
      eval = [data](Coalition s) -> Rational {
        return institutional_value(data->centralities, s) / data->institutional_total;
      };
      break;
    case GameKind::Aggregated:
      eval = [data, w](Coalition s) -> Rational {
        return w.alpha() * physical_value(data->graph, s) / data->physical_total +
               w.beta() * institutional_value(data->centralities, s) / data->institutional_total;
      };
      break;
    case GameKind::Synthetic:
      break;
  }
  return CharacteristicGame(g.size(), kind, std::move(eval));
}

}  // namespace isalloc
