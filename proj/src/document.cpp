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

#include "isalloc/document.hpp"

#include <fstream>
#include <sstream>

namespace isalloc {
namespace {

using nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::optional<Rational> weight_from_json(const json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return parse_rational(value.dump());
  return std::nullopt;
}

}  // namespace

DocumentError::DocumentError(std::vector<DocumentDiagnostic> diagnostics)
    : std::runtime_error(diagnostics.empty() ? "invalid graph document"
                                             : diagnostics.front().location + ": " + diagnostics.front().message),
      diagnostics_(std::move(diagnostics)) {}

RawGraph parse_graph_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // The byte offset points one past the offending character.
    std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw DocumentError(std::vector<DocumentDiagnostic>{{line_column(text, byte), "malformed JSON: " + std::string(e.what())}});
  }

  std::vector<DocumentDiagnostic> errors;
  auto error = [&](std::string location, std::string message) { errors.push_back({std::move(location), std::move(message)}); };

  if (!doc.is_object()) throw DocumentError(std::vector<DocumentDiagnostic>{{"<root>", "expected a JSON object"}});

  if (!doc.contains("format_version")) {
    error("format_version", "missing field");
  } else if (!doc["format_version"].is_string()) {
    error("format_version", "expected a string");
  } else if (doc["format_version"].get<std::string>() != kGraphFormatVersion) {
    error("format_version", "unsupported version '" + doc["format_version"].get<std::string>() + "', expected '" +
                                std::string(kGraphFormatVersion) + "'");
  }

  RawGraph raw;
  if (!doc.contains("firms") || !doc["firms"].is_array()) {
    error("firms", "expected an array of firm id strings");
  } else {
    const auto& firms = doc["firms"];
    for (std::size_t k = 0; k < firms.size(); ++k) {
      const std::string where = "firms[" + std::to_string(k) + "]";
      if (!firms[k].is_string() || firms[k].get<std::string>().empty()) {
        error(where, "expected a non-empty string");
        continue;
      }
      raw.firms.push_back(firms[k].get<std::string>());
    }
  }

  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    error("edges", "expected an array of {a, b, w} objects");
  } else {
    const auto& edges = doc["edges"];
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const std::string where = "edges[" + std::to_string(k) + "]";
      const auto& e = edges[k];
      if (!e.is_object()) {
        error(where, "expected an object");
        continue;
      }
      bool ok = true;
      for (const char* end : {"a", "b"}) {
        if (!e.contains(end) || !e[end].is_string()) {
          error(where + "." + end, "expected a firm id string");
          ok = false;
        }
      }
      std::optional<Rational> w;
      if (!e.contains("w")) {
        error(where + ".w", "missing weight");
        ok = false;
      } else if (w = weight_from_json(e["w"]); !w) {
        error(where + ".w", "weight must be an integer, a decimal string or a \"p/q\" string, got " + e["w"].dump());
        ok = false;
      }
      if (ok) raw.edges.push_back({e["a"].get<std::string>(), e["b"].get<std::string>(), *w});
    }
  }

  if (!errors.empty()) throw DocumentError(std::move(errors));
  return raw;
}

RawGraph load_graph_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError(std::vector<DocumentDiagnostic>{{path.string(), "cannot open file"}});
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_document(buffer.str());
}

nlohmann::ordered_json to_document(const ISGraph& g) {
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j : g.neighbors(i)) {
      if (j > i) edges.push_back({{"a", g.firm(i)}, {"b", g.firm(j)}, {"w", to_fraction_string(g.weight(i, j))}});
    }
  }
  return {{"format_version", kGraphFormatVersion}, {"firms", g.firms()}, {"edges", edges}};
}

}  // namespace isalloc
