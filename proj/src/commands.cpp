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

#include "isalloc/cli.hpp"

#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <utility>

#include "CLI11.hpp"

#include "isalloc/allocation.hpp"
#include "isalloc/document.hpp"
#include "isalloc/generator.hpp"
#include "isalloc/report.hpp"
#include "isalloc/shapley.hpp"
#include "isalloc/verify.hpp"

namespace isalloc::cli {
namespace {

struct Failure {
  int code;
  std::string message;
};

ISGraph load_graph(const std::string& path, std::ostream& err) {
  RawGraph raw;
  try {
    raw = load_graph_document(path);
  } catch (const DocumentError& e) {
    for (const auto& d : e.diagnostics()) err << "error: " << path << ": " << d.location << ": " << d.message << "\n";
    throw Failure{kInputError, ""};
  }
  auto result = validate(raw);
  if (!result.ok()) {
    for (const auto& issue : result.issues) err << "error: " << to_string(issue.kind) << ": " << issue.message << "\n";
    throw Failure{kDomainError, ""};
  }
  return std::move(*result.graph);
}

Rational parse_flag(const std::string& name, const std::string& text) {
  auto value = parse_rational(text);
  if (!value) throw Failure{kInputError, "--" + name + ": '" + text + "' is not an integer, decimal or p/q rational"};
  return *value;
}

AggregationWeights parse_weights(const std::string& alpha, const std::string& beta) {
  return AggregationWeights(parse_flag("alpha", alpha), parse_flag("beta", beta));
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Failure& f) {
    if (!f.message.empty()) err << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    // EnumerationLimitExceeded, InvalidTransactionCost, non-positive
    // aggregation weights.
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

void write_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

// --- check suites ---------------------------------------------------------

bool suite_includes(const std::string& suite, const std::string& part) { return suite == "all" || suite == part; }

std::vector<PropertyReport> run_suites(const ISGraph& g, const std::string& suite, const TransactionCost& tc,
                                       const AggregationWeights& w, std::uint64_t seed) {
  const std::size_t n = g.size();
  const bool exhaustive = suite_includes(suite, "game-properties") || suite_includes(suite, "core");
  if (exhaustive && n > kExhaustiveCheckLimit) throw EnumerationLimitExceeded(n, kExhaustiveCheckLimit);
  if (suite_includes(suite, "axioms") && n > kFairnessCheckLimit) throw EnumerationLimitExceeded(n, kFairnessCheckLimit);

  std::vector<PropertyReport> out;
  if (suite_includes(suite, "game-properties")) {
    for (GameKind kind : {GameKind::Physical, GameKind::Institutional, GameKind::Aggregated}) {
      auto game = make_game(g, kind, w);
      out.push_back(check_monotonicity(game));
      out.push_back(check_superadditivity(game));
      out.push_back(check_convexity(game));
      if (kind == GameKind::Institutional) out.push_back(check_modularity(game));
    }
  }
  if (suite_includes(suite, "core")) {
    const auto index = is_index(g, w);
    out.push_back(check_core(make_game(g, GameKind::Aggregated, w), index.sigma()));
    std::vector<Rational> physical, institutional;
    for (std::size_t i = 0; i < n; ++i) {
      physical.push_back(shapley_physical_closed(g, i));
      institutional.push_back(shapley_institutional_closed(g, i));
    }
    out.push_back(check_core(make_game(g, GameKind::Physical), physical));
    out.push_back(check_core(make_game(g, GameKind::Institutional), institutional));
  }
  if (suite_includes(suite, "axioms")) {
    GraphGenSpec partner_spec;
    partner_spec.firm_count = n;
    partner_spec.seed = seed;
    partner_spec.firm_ids = g.firms();
    const ISGraph partner = generate_graph(partner_spec);
    for (auto& r : check_fairness_axioms(g, tc, w, &partner)) out.push_back(std::move(r));
    out.push_back(check_stability(allocate(g, tc, w)));
  }
  return out;
}

}  // namespace

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ISGraph g = load_graph(path, err);
    out << "valid IS graph: " << g.size() << " firms, " << g.edge_count() << " edges\n";
    return kSuccess;
  });
}

int cmd_allocate(const AllocateArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (args.precision < 0) throw Failure{kInputError, "--precision must be non-negative"};
    const ISGraph g = load_graph(args.path, err);
    const TransactionCost tc(parse_flag("tc", args.tc));
    const auto w = parse_weights(args.alpha, args.beta);
    auto report = allocate(g, tc, w, AllocationOptions{args.precision});

    bool violated = false;
    if (args.with_checks) {
      report.checks.push_back(check_stability(report));
      if (g.size() <= kExhaustiveCheckLimit) {
        report.checks.push_back(check_core(make_game(g, GameKind::Aggregated, w), report.index.sigma()));
      }
      for (const auto& c : report.checks) violated = violated || !c.holds;
    }

    if (args.format == Format::Json) {
      write_json(out, to_json(report));
    } else {
      out << render_table(report);
      if (args.with_checks && g.size() > kExhaustiveCheckLimit) {
        out << "core check skipped: " << g.size() << " firms exceeds the exhaustive limit of " << kExhaustiveCheckLimit
            << "\n";
      }
    }
    return violated ? kDomainError : kSuccess;
  });
}

int cmd_index(const IndexArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ISGraph g = load_graph(args.path, err);
    const auto w = parse_weights(args.alpha, args.beta);
    const auto index = is_index(g, w);

    std::optional<bool> oracle_match;
    if (args.exact) oracle_match = is_index_exact(g, w) == index;

    if (args.format == Format::Json) {
      Json doc = {{"firms", g.firms()},
                  {"alpha", to_fraction_string(w.alpha())},
                  {"beta", to_fraction_string(w.beta())},
                  {"index", to_json(g.firms(), index)}};
      if (oracle_match) doc["oracle"] = *oracle_match ? "match" : "mismatch";
      write_json(out, doc);
    } else {
      out << render_index_table(g.firms(), index);
      if (oracle_match) out << "oracle: " << (*oracle_match ? "match" : "MISMATCH") << "\n";
    }
    return oracle_match.value_or(true) ? kSuccess : kDomainError;
  });
}

int cmd_centrality(const CentralityArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (args.precision < 0) throw Failure{kInputError, "--precision must be non-negative"};
    const ISGraph g = load_graph(args.path, err);
    if (args.format == Format::Json) {
      Json rows = Json::array();
      const auto c = closeness_centralities(g);
      for (std::size_t i = 0; i < g.size(); ++i) {
        rows.push_back({{"firm", g.firm(i)}, {"centrality", to_fraction_string(c[i])},
                        {"decimal", render_decimal(c[i], args.precision)}});
      }
      write_json(out, Json{{"centrality", rows}, {"total", to_fraction_string(sum(c))}});
    } else {
      out << render_centrality_table(g, args.precision);
    }
    return kSuccess;
  });
}

int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    static const std::vector<std::string> kSuites{"all", "game-properties", "axioms", "core"};
    if (std::find(kSuites.begin(), kSuites.end(), args.suite) == kSuites.end()) {
      throw Failure{kInputError, "--suite must be one of all, game-properties, axioms, core"};
    }
    if (!args.path && args.trials == 0) throw Failure{kInputError, "check needs a graph file or --trials K"};
    if (args.trials > 0 && args.max_firms < 2) throw Failure{kInputError, "--max-firms must be at least 2"};

    const TransactionCost tc(parse_flag("tc", args.tc));
    const auto w = parse_weights(args.alpha, args.beta);
    bool all_hold = true;
    Json doc = {{"suite", args.suite}, {"graphs", Json::array()}};

    if (args.path) {
      const ISGraph g = load_graph(*args.path, err);
      auto reports = run_suites(g, args.suite, tc, w, args.seed);
      Json entry = {{"source", *args.path}, {"firm_count", g.size()}, {"reports", Json::array()}};
      if (args.format == Format::Table) out << "graph " << *args.path << " (" << g.size() << " firms)\n";
      for (const auto& r : reports) {
        all_hold = all_hold && r.holds;
        if (args.format == Format::Table) out << "  " << render_property_line(r, &g.firms());
        entry["reports"].push_back(to_json(r, &g.firms()));
      }
      doc["graphs"].push_back(entry);
    }

    if (args.trials > 0) {
      std::mt19937_64 engine(args.seed);
      // (property, subject) -> graphs holding, graphs checked
      std::map<std::pair<std::string, std::string>, std::pair<std::size_t, std::size_t>> tally;
      std::vector<std::pair<std::string, std::string>> order;
      for (std::size_t t = 0; t < args.trials; ++t) {
        GraphGenSpec spec;
        spec.firm_count = 2 + static_cast<std::size_t>(engine() % (args.max_firms - 1));
        spec.edge_density = args.density;
        spec.seed = engine();
        const ISGraph g = generate_graph(spec);
        auto reports = run_suites(g, args.suite, tc, w, spec.seed);
        Json entry = {{"source", "random"}, {"seed", spec.seed}, {"firm_count", g.size()}, {"reports", Json::array()}};
        for (const auto& r : reports) {
          all_hold = all_hold && r.holds;
          auto key = std::make_pair(r.property, r.subject);
          if (!tally.contains(key)) order.push_back(key);
          auto& [holding, checked] = tally[key];
          ++checked;
          if (r.holds) {
            ++holding;
          } else if (args.format == Format::Table) {
            out << "  seed " << spec.seed << ": " << render_property_line(r, &g.firms());
          }
          entry["reports"].push_back(to_json(r, &g.firms()));
        }
        doc["graphs"].push_back(entry);
      }
      if (args.format == Format::Table) {
        out << args.trials << " random graphs (seed " << args.seed << ", up to " << args.max_firms << " firms)\n";
        for (const auto& key : order) {
          const auto& [holding, checked] = tally[key];
          out << "  " << key.first << " [" << key.second << "]: holds on " << holding << "/" << checked << " graphs\n";
        }
      }
    }

    doc["all_hold"] = all_hold;
    if (args.format == Format::Json) {
      write_json(out, doc);
    } else {
      out << (all_hold ? "all properties hold\n" : "violations found\n");
    }
    return all_hold ? kSuccess : kDomainError;
  });
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fair transaction-cost allocation for industrial-symbiosis networks", "isalloc"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"table", Format::Table}, {"json", Format::Json}};

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check a graph document and report every violation");
  validate_cmd->add_option("graph", validate_path, "Graph document (JSON)")->required();

  AllocateArgs allocate_args;
  auto* allocate_cmd = app.add_subcommand("allocate", "Allocate a transaction cost among the firms");
  allocate_cmd->add_option("graph", allocate_args.path, "Graph document (JSON)")->required();
  allocate_cmd->add_option("--tc", allocate_args.tc, "Collective transaction cost (integer, decimal or p/q)")->required();
  allocate_cmd->add_option("--alpha", allocate_args.alpha, "Weight of the physical game");
  allocate_cmd->add_option("--beta", allocate_args.beta, "Weight of the institutional game");
  allocate_cmd->add_option("--precision", allocate_args.precision, "Decimals in rendered shares");
  allocate_cmd->add_option("--format", allocate_args.format, "table or json")->transform(CLI::CheckedTransformer(formats));
  allocate_cmd->add_flag("--with-checks", allocate_args.with_checks, "Append stability and core checks");

  IndexArgs index_args;
  auto* index_cmd = app.add_subcommand("index", "Print the IS index of every firm");
  index_cmd->add_option("graph", index_args.path, "Graph document (JSON)")->required();
  index_cmd->add_option("--alpha", index_args.alpha, "Weight of the physical game");
  index_cmd->add_option("--beta", index_args.beta, "Weight of the institutional game");
  index_cmd->add_flag("--exact", index_args.exact, "Cross-check against brute-force Shapley values");
  index_cmd->add_option("--format", index_args.format, "table or json")->transform(CLI::CheckedTransformer(formats));

  CentralityArgs centrality_args;
  auto* centrality_cmd = app.add_subcommand("centrality", "Print closeness centralities");
  centrality_cmd->add_option("graph", centrality_args.path, "Graph document (JSON)")->required();
  centrality_cmd->add_option("--precision", centrality_args.precision, "Decimals in the decimal column");
  centrality_cmd->add_option("--format", centrality_args.format, "table or json")
      ->transform(CLI::CheckedTransformer(formats));

  CheckArgs check_args;
  std::string check_path;
  auto* check_cmd = app.add_subcommand("check", "Run property and axiom checkers");
  check_cmd->add_option("graph", check_path, "Graph document (JSON)");
  check_cmd->add_option("--suite", check_args.suite, "all, game-properties, axioms or core")
      ->check(CLI::IsMember({"all", "game-properties", "axioms", "core"}));
  check_cmd->add_option("--seed", check_args.seed, "Seed for random graphs");
  check_cmd->add_option("--trials", check_args.trials, "Number of random graphs to check");
  check_cmd->add_option("--max-firms", check_args.max_firms, "Largest random graph");
  check_cmd->add_option("--density", check_args.density, "Edge density of random graphs, in (0, 1]");
  check_cmd->add_option("--tc", check_args.tc, "Transaction cost used by the axiom suite");
  check_cmd->add_option("--alpha", check_args.alpha, "Weight of the physical game");
  check_cmd->add_option("--beta", check_args.beta, "Weight of the institutional game");
  check_cmd->add_option("--format", check_args.format, "table or json")->transform(CLI::CheckedTransformer(formats));

  std::vector<const char*> raw{"isalloc"};
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  if (*validate_cmd) return cmd_validate(validate_path, out, err);
  if (*allocate_cmd) return cmd_allocate(allocate_args, out, err);
  if (*index_cmd) return cmd_index(index_args, out, err);
  if (*centrality_cmd) return cmd_centrality(centrality_args, out, err);
  if (!check_path.empty()) check_args.path = check_path;
  return cmd_check(check_args, out, err);
}

}  // namespace isalloc::cli
