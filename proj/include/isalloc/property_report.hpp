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

#ifndef ISALLOC_PROPERTY_REPORT_HPP
#define ISALLOC_PROPERTY_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isalloc/coalition.hpp"
#include "isalloc/rational.hpp"

namespace isalloc {

/// The violated inequality `lhs <relation> rhs` together with the coalitions
/// or firms it was evaluated on. Both sides are exact, so the violation can be
/// re-derived by calling the game directly.
struct Counterexample {
  std::vector<Coalition> coalitions;
  std::vector<std::size_t> firms;
  std::string relation;
  Rational lhs;
  Rational rhs;
};

struct PropertyReport {
  std::string property;
  std::string subject;
  bool holds = true;
  std::optional<Counterexample> counterexample;
  std::uint64_t instances_checked = 0;
};

}  // namespace isalloc

#endif  // ISALLOC_PROPERTY_REPORT_HPP
