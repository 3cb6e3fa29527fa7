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

#include "isalloc/generator.hpp"

#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace isalloc {
namespace {

constexpr unsigned kWeightSteps = 100;

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) from the top 53 bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }

 private:
  std::mt19937_64 engine_;
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

ISGraph generate_graph(const GraphGenSpec& spec) {
  const std::size_t n = spec.firm_count;
  if (n < 2) throw InfeasibleSpec("InfeasibleSpec: need at least two firms");
  if (!(spec.edge_density > 0.0 && spec.edge_density <= 1.0)) {
    throw InfeasibleSpec("InfeasibleSpec: edge density must lie in (0, 1]");
  }
  if (sgn(spec.weight_min) <= 0 || spec.weight_max < spec.weight_min) {
    throw InfeasibleSpec("InfeasibleSpec: weight range must satisfy 0 < min <= max");
  }

  Draw draw(spec.seed);
  const Rational step = (spec.weight_max - spec.weight_min) / kWeightSteps;
  auto next_weight = [&] { return Rational(spec.weight_min + step * static_cast<unsigned long>(draw.below(kWeightSteps + 1))); };

  if (!spec.firm_ids.empty() && spec.firm_ids.size() != n) {
    throw InfeasibleSpec("InfeasibleSpec: firm_ids must name exactly firm_count firms");
  }

  RawGraph raw;
  raw.firms = spec.firm_ids;
  for (std::size_t i = raw.firms.size(); i < n; ++i) raw.firms.push_back(std::to_string(i + 1));

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (draw.unit() < spec.edge_density) {
        raw.edges.push_back({raw.firms[i], raw.firms[j], next_weight()});
        parent[find_root(parent, i)] = find_root(parent, j);
      }
    }
  }

  // Join every other component to the one holding firm 0.
  std::vector<std::vector<std::size_t>> groups(n);
  for (std::size_t i = 0; i < n; ++i) groups[find_root(parent, i)].push_back(i);
  std::vector<std::size_t> joined = groups[find_root(parent, 0)];
  for (std::size_t r = 0; r < n; ++r) {
    if (groups[r].empty() || r == find_root(parent, 0)) continue;
    std::size_t a = joined[draw.below(joined.size())];
    std::size_t b = groups[r][draw.below(groups[r].size())];
    raw.edges.push_back({raw.firms[a], raw.firms[b], next_weight()});
    joined.insert(joined.end(), groups[r].begin(), groups[r].end());
  }

  auto result = validate(raw);
  if (!result.ok()) throw std::logic_error("generate_graph produced an invalid graph: " + result.issues.front().message);
  return std::move(*result.graph);
}

}  // namespace isalloc
