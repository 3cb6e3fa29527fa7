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

#ifndef ISALLOC_CLI_HPP
#define ISALLOC_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace isalloc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDomainError = 1,  // invalid graph, bad cost, violated property, limit exceeded
  kInputError = 2,   // unreadable file, malformed document or flag value
};

enum class Format { Table, Json };

struct AllocateArgs {
  std::string path;
  std::string tc;
  std::string alpha = "1";
  std::string beta = "1";
  int precision = 2;
  Format format = Format::Table;
  bool with_checks = false;
};

struct IndexArgs {
  std::string path;
  std::string alpha = "1";
  std::string beta = "1";
  bool exact = false;
  Format format = Format::Table;
};

struct CentralityArgs {
  std::string path;
  int precision = 4;
  Format format = Format::Table;
};

struct CheckArgs {
  std::optional<std::string> path;
  std::string suite = "all";  // all | game-properties | axioms | core
  std::uint64_t seed = 0;
  std::size_t trials = 0;     // random graphs in addition to (or instead of) the file
  std::size_t max_firms = 7;
  double density = 0.5;
  std::string tc = "100";
  std::string alpha = "1";
  std::string beta = "1";
  Format format = Format::Table;
};

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_allocate(const AllocateArgs& args, std::ostream& out, std::ostream& err);
int cmd_index(const IndexArgs& args, std::ostream& out, std::ostream& err);
int cmd_centrality(const CentralityArgs& args, std::ostream& out, std::ostream& err);
int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err);

/// Parses argv (subcommand first) and dispatches. Usage errors return
/// kInputError.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace isalloc::cli

#endif  // ISALLOC_CLI_HPP
