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

#include "isalloc/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <unordered_map>
#include <utility>

namespace isalloc {

std::string_view to_string(GraphErrorKind kind) {
  switch (kind) {
    case GraphErrorKind::NegativeWeight: return "NegativeWeight";
    case GraphErrorKind::SelfLoop: return "SelfLoop";
    case GraphErrorKind::AsymmetricWeight: return "AsymmetricWeight";
    case GraphErrorKind::IsolatedFirm: return "IsolatedFirm";
    case GraphErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case GraphErrorKind::TooFewFirms: return "TooFewFirms";
    case GraphErrorKind::DuplicateFirmId: return "DuplicateFirmId";
    case GraphErrorKind::UnknownFirm: return "UnknownFirm";
  }
  return "Unknown";
}

std::optional<std::size_t> ISGraph::index_of(std::string_view id) const {
  auto it = std::find(firms_.begin(), firms_.end(), id);
  if (it == firms_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - firms_.begin());
}

Rational ISGraph::incident_weight(std::size_t i) const {
  Rational total = 0;
  for (std::size_t j : neighbors(i)) total += weight(i, j);
  return total;
}

Rational ISGraph::total_weight() const {
  Rational total = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j : neighbors(i)) {
      if (j > i) total += weight(i, j);
    }
  }
  return total;
}

std::size_t ISGraph::edge_count() const {
  std::size_t degree_sum = 0;
  for (const auto& adj : adjacency_) degree_sum += adj.size();
  return degree_sum / 2;
}

bool ValidationResult::has(GraphErrorKind kind) const {
  return std::any_of(issues.begin(), issues.end(),
                     [kind](const GraphIssue& issue) { return issue.kind == kind; });
}

struct GraphBuilder {
  static ISGraph build(std::vector<std::string> firms, std::vector<Rational> weights) {
    ISGraph g;
    const std::size_t n = firms.size();
    g.firms_ = std::move(firms);
    g.weights_ = std::move(weights);
    g.adjacency_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && sgn(g.weights_[i * n + j]) > 0) g.adjacency_[i].push_back(j);
      }
    }
    return g;
  }
};

ValidationResult validate(const RawGraph& raw) {
  ValidationResult result;
  auto report = [&](GraphErrorKind kind, std::string message) {
    result.issues.push_back({kind, std::move(message)});
  };

  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::string> firms;
  for (const auto& id : raw.firms) {
    if (index.contains(id)) {
      report(GraphErrorKind::DuplicateFirmId, "firm id '" + id + "' declared more than once");
      continue;
    }
    index.emplace(id, firms.size());
    firms.push_back(id);
  }
  const std::size_t n = firms.size();
  if (n < 2) {
    report(GraphErrorKind::TooFewFirms,
           "an IS graph needs at least two firms, got " + std::to_string(n));
  }

  // Entries keyed by the ordered pair as supplied, so that conflicting
  // directions can be told apart from repeated ones.
  std::map<std::pair<std::size_t, std::size_t>, Rational> given;
  for (const auto& e : raw.edges) {
    auto ia = index.find(e.a);
    auto ib = index.find(e.b);
    if (ia == index.end() || ib == index.end()) {
      const std::string& missing = ia == index.end() ? e.a : e.b;
      report(GraphErrorKind::UnknownFirm, "edge " + e.a + "-" + e.b + " references undeclared firm '" + missing + "'");
      continue;
    }
    if (sgn(e.weight) < 0) {
      report(GraphErrorKind::NegativeWeight,
             "edge " + e.a + "-" + e.b + " has negative weight " + to_fraction_string(e.weight));
      continue;
    }
    if (ia->second == ib->second) {
      if (sgn(e.weight) != 0) {
        report(GraphErrorKind::SelfLoop, "firm '" + e.a + "' has a self-loop");
      }
      continue;
    }
    auto key = std::make_pair(ia->second, ib->second);
    Rational w = e.weight;
    w.canonicalize();
    auto [it, inserted] = given.emplace(key, w);
    if (!inserted && it->second != w) {
      report(GraphErrorKind::AsymmetricWeight,
             "edge " + e.a + "-" + e.b + " given twice with weights " + to_fraction_string(it->second) +
                 " and " + to_fraction_string(w));
    }
  }

  std::vector<Rational> weights(n * n, Rational(0));
  for (const auto& [key, w] : given) {
    auto [i, j] = key;
    auto reverse = given.find({j, i});
    if (reverse != given.end() && reverse->second != w) {
      if (i < j) {
        report(GraphErrorKind::AsymmetricWeight,
               "weights for " + firms[i] + "-" + firms[j] + " disagree: " + to_fraction_string(w) +
                   " vs " + to_fraction_string(reverse->second));
      }
      continue;
    }
    weights[i * n + j] = w;
    weights[j * n + i] = w;
  }

  // Isolated firms and connectivity among the rest.
  std::vector<bool> isolated(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(weights[i * n + j]) > 0) isolated[i] = false;
    }
    if (isolated[i]) report(GraphErrorKind::IsolatedFirm, "firm '" + firms[i] + "' has no incident edge");
  }

  std::vector<int> component(n, -1);
  int components = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (isolated[s] || component[s] >= 0) continue;
    std::deque<std::size_t> queue{s};
    component[s] = components;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        if (component[v] < 0 && sgn(weights[u * n + v]) > 0) {
          component[v] = components;
          queue.push_back(v);
        }
      }
    }
    ++components;
  }
  if (components > 1) {
    report(GraphErrorKind::DisconnectedGraph,
           "edges form " + std::to_string(components) + " connected components, expected 1");
  }

  if (result.issues.empty()) {
    result.graph = GraphBuilder::build(std::move(firms), std::move(weights));
  }
  return result;
}

std::vector<std::uint32_t> hop_distances_from(const ISGraph& g, std::size_t source) {
  constexpr auto unreached = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(g.size(), unreached);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : g.neighbors(u)) {
      if (dist[v] == unreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

DistanceMatrix distances(const ISGraph& g) {
  DistanceMatrix d(g.size());
  for (std::size_t s = 0; s < g.size(); ++s) {
    auto row = hop_distances_from(g, s);
    for (std::size_t t = 0; t < g.size(); ++t) d.at(s, t) = row[t];
  }
  return d;
}

namespace {

Rational closeness_from_row(std::size_t n, const auto& row_at) {
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) total += row_at(j);
  Rational c(Integer(static_cast<unsigned long>(n - 1)), total);
  c.canonicalize();
  return c;
}

}  // namespace

Rational closeness_centrality(const ISGraph& g, std::size_t i) {
  auto row = hop_distances_from(g, i);
  return closeness_from_row(g.size(), [&](std::size_t j) { return static_cast<unsigned long>(row[j]); });
}

std::vector<Rational> closeness_centralities(const DistanceMatrix& d) {
  std::vector<Rational> out;
  out.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    out.push_back(closeness_from_row(d.size(), [&](std::size_t j) { return static_cast<unsigned long>(d(i, j)); }));
  }
  return out;
}

std::vector<Rational> closeness_centralities(const ISGraph& g) { return closeness_centralities(distances(g)); }

}  // namespace isalloc
