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

#ifndef ISALLOC_GENERATOR_HPP
#define ISALLOC_GENERATOR_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "isalloc/graph.hpp"
#include "isalloc/rational.hpp"

namespace isalloc {

class InfeasibleSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GraphGenSpec {
  std::size_t firm_count = 6;
  double edge_density = 0.5;  // probability that a given pair is linked, in (0, 1]
  Rational weight_min = 1;
  Rational weight_max = 10;
  std::uint64_t seed = 0;
  /// Optional names; defaults to "1".."n". Size must match firm_count.
  std::vector<std::string> firm_ids;
};

/// Random connected IS graph. Each pair is linked with probability
/// edge_density; weights are drawn from 101 evenly spaced values in
/// [weight_min, weight_max]. Components left disconnected are then joined
/// by one extra edge each.
///
/// Deterministic for a fixed spec across platforms (mt19937_64 raw output
/// only, no standard distributions).
///
/// Throws InfeasibleSpec when n < 2, the density is outside (0, 1], or the
/// weight range is empty or not strictly positive, or firm_ids has the
/// wrong size.
ISGraph generate_graph(const GraphGenSpec& spec);

}  // namespace isalloc

#endif  // ISALLOC_GENERATOR_HPP
