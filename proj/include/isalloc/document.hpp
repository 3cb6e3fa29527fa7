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

#ifndef ISALLOC_DOCUMENT_HPP
#define ISALLOC_DOCUMENT_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "isalloc/graph.hpp"

// Graph document format:
//
//   {
//     "format_version": "1",
//     "firms": ["1", "2", ...],
//     "edges": [{"a": "1", "b": "2", "w": "4"}, {"a": "1", "b": "3", "w": "1/2"}]
//   }
//
// Weights are strings holding an integer, a plain decimal ("0.25") or "p/q".
// JSON integers are accepted as well; JSON floating-point numbers are not.
namespace isalloc {

inline constexpr std::string_view kGraphFormatVersion = "1";

struct DocumentDiagnostic {
  std::string location;  // "line 3, column 7" or a field path such as "edges[2].w"
  std::string message;
};

class DocumentError : public std::runtime_error {
 public:
  explicit DocumentError(std::vector<DocumentDiagnostic> diagnostics);
  const std::vector<DocumentDiagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<DocumentDiagnostic> diagnostics_;
};

/// Throws DocumentError listing every malformed field. Structural graph
/// problems (negative weights, disconnection, ...) are left to validate().
RawGraph parse_graph_document(std::string_view text);

/// Reads and parses a file; unreadable files raise DocumentError too.
RawGraph load_graph_document(const std::filesystem::path& path);

nlohmann::ordered_json to_document(const ISGraph& g);

}  // namespace isalloc

#endif  // ISALLOC_DOCUMENT_HPP
