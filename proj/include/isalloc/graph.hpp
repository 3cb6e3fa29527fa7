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

#ifndef ISALLOC_GRAPH_HPP
#define ISALLOC_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isalloc/rational.hpp"

namespace isalloc {

/// One weight entry as supplied by the user, before validation. Only one
/// direction of an undirected edge needs to be given.
struct RawEdge {
  std::string a;
  std::string b;
  Rational weight;
};

struct RawGraph {
  std::vector<std::string> firms;
  std::vector<RawEdge> edges;
};

enum class GraphErrorKind {
  NegativeWeight,
  SelfLoop,
  AsymmetricWeight,
  IsolatedFirm,
  DisconnectedGraph,
  TooFewFirms,
  DuplicateFirmId,
  UnknownFirm,
};

std::string_view to_string(GraphErrorKind kind);

struct GraphIssue {
  GraphErrorKind kind;
  std::string message;
};

/**
 * Connectivity graph of an industrial-symbiosis cluster.
 *
 * Firms are indexed 0..n-1 in the order they were declared. The weight
 * matrix is symmetric, loop-free and non-negative; an edge exists exactly
 * where the weight is positive. Every instance is connected and has at least
 * two firms, so only validate() can construct one.
 */
class ISGraph {
 public:
  std::size_t size() const noexcept { return firms_.size(); }
  const std::vector<std::string>& firms() const noexcept { return firms_; }
  const std::string& firm(std::size_t i) const { return firms_.at(i); }
  std::optional<std::size_t> index_of(std::string_view id) const;

  const Rational& weight(std::size_t i, std::size_t j) const { return weights_[i * size() + j]; }
  bool adjacent(std::size_t i, std::size_t j) const { return sgn(weight(i, j)) > 0; }
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_.at(i); }

  /// Sum of the weights on edges incident to `i`.
  Rational incident_weight(std::size_t i) const;
  /// Sum over unordered pairs, i.e. half the sum of the whole matrix.
  Rational total_weight() const;
  std::size_t edge_count() const;

 private:
  friend struct GraphBuilder;
  ISGraph() = default;

  std::vector<std::string> firms_;
  std::vector<Rational> weights_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

struct ValidationResult {
  std::optional<ISGraph> graph;
  std::vector<GraphIssue> issues;

  bool ok() const noexcept { return graph.has_value(); }
  bool has(GraphErrorKind kind) const;
};

/// Checks every graph invariant and reports all violations, not only the
/// first. Edges given in one direction are mirrored; edges given in both
/// directions must agree. Zero weights mean "no edge".
ValidationResult validate(const RawGraph& raw);

/// Hop-count distances between all pairs of firms. Weights are ignored.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::size_t n) : n_(n), dist_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }
  std::uint32_t& at(std::size_t i, std::size_t j) { return dist_[i * n_ + j]; }

  bool operator==(const DistanceMatrix&) const = default;

 private:
  std::size_t n_;
  std::vector<std::uint32_t> dist_;
};

/// Breadth-first search from a single firm; returns hop counts to every firm.
std::vector<std::uint32_t> hop_distances_from(const ISGraph& g, std::size_t source);

/// BFS from every source, O(n (n + m)).
DistanceMatrix distances(const ISGraph& g);

/// (n - 1) / sum_j d(i, j). Lies in (0, 1]; equals 1 iff i is adjacent to
/// every other firm.
Rational closeness_centrality(const ISGraph& g, std::size_t i);

std::vector<Rational> closeness_centralities(const ISGraph& g);
std::vector<Rational> closeness_centralities(const DistanceMatrix& d);

}  // namespace isalloc

#endif  // ISALLOC_GRAPH_HPP
