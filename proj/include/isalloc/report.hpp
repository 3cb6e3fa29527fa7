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

#ifndef ISALLOC_REPORT_HPP
#define ISALLOC_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "isalloc/allocation.hpp"
#include "isalloc/graph.hpp"
#include "isalloc/property_report.hpp"
#include "isalloc/shapley.hpp"

// JSON and plain-text renderers. Every JSON document carries exact values as
// "p/q" strings; rounded decimals only ever appear next to their exact value.
namespace isalloc {

using Json = nlohmann::ordered_json;

Json to_json(const AllocationReport& report);
Json to_json(const std::vector<std::string>& firms, const ISIndexVector& index);
Json to_json(const PropertyReport& report, const std::vector<std::string>* firm_ids = nullptr);

std::string render_table(const AllocationReport& report);
std::string render_index_table(const std::vector<std::string>& firms, const ISIndexVector& index);
std::string render_centrality_table(const ISGraph& g, int precision);
std::string render_property_line(const PropertyReport& report, const std::vector<std::string>* firm_ids = nullptr);

/// Left-aligned columns separated by two spaces; no trailing whitespace.
std::string render_columns(const std::vector<std::vector<std::string>>& rows);

}  // namespace isalloc

#endif  // ISALLOC_REPORT_HPP
