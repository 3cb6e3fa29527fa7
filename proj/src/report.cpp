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

#include "isalloc/report.hpp"

#include <algorithm>
#include <sstream>

namespace isalloc {
namespace {

Json coalition_json(Coalition s, const std::vector<std::string>* firm_ids) {
  Json members = Json::array();
  for (std::size_t i : s.members()) {
    if (firm_ids != nullptr && i < firm_ids->size()) {
      members.push_back((*firm_ids)[i]);
    } else {
      members.push_back(i);
    }
  }
  return members;
}

std::string firm_label(std::size_t i, const std::vector<std::string>* firm_ids) {
  return firm_ids != nullptr && i < firm_ids->size() ? (*firm_ids)[i] : std::to_string(i);
}

}  // namespace

Json to_json(const std::vector<std::string>& firms, const ISIndexVector& index) {
  Json out = Json::array();
  for (std::size_t i = 0; i < index.size(); ++i) {
    out.push_back({{"firm", firms.at(i)},
                   {"physical", to_fraction_string(index[i].physical)},
                   {"institutional", to_fraction_string(index[i].institutional)},
                   {"sigma", to_fraction_string(index[i].sigma)}});
  }
  return out;
}

Json to_json(const AllocationReport& report) {
  Json shares_exact = Json::array();
  for (const auto& s : report.shares) shares_exact.push_back(to_fraction_string(s));
  Json out = {
      {"firms", report.firms},
      {"tau", to_fraction_string(report.tc.total())},
      {"alpha", to_fraction_string(report.weights.alpha())},
      {"beta", to_fraction_string(report.weights.beta())},
      {"precision", report.precision},
      {"shares_exact", shares_exact},
      {"shares_rendered", report.rendered},
      {"index", to_json(report.firms, report.index)},
      {"efficiency_residual", to_fraction_string(report.efficiency_residual)},
  };
  if (!report.checks.empty()) {
    Json checks = Json::array();
    for (const auto& c : report.checks) checks.push_back(to_json(c, &report.firms));
    out["checks"] = checks;
  }
  return out;
}

Json to_json(const PropertyReport& report, const std::vector<std::string>* firm_ids) {
  Json out = {{"property", report.property},
              {"subject", report.subject},
              {"holds", report.holds},
              {"instances_checked", report.instances_checked}};
  if (report.counterexample) {
    const auto& c = *report.counterexample;
    Json coalitions = Json::array();
    for (auto s : c.coalitions) coalitions.push_back(coalition_json(s, firm_ids));
    Json firms = Json::array();
    for (auto i : c.firms) firms.push_back(firm_label(i, firm_ids));
    out["counterexample"] = {{"relation", c.relation},
                             {"coalitions", coalitions},
                             {"firms", firms},
                             {"lhs", to_fraction_string(c.lhs)},
                             {"rhs", to_fraction_string(c.rhs)}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string render_table(const AllocationReport& report) {
  std::vector<std::vector<std::string>> rows{{"firm", "share", "exact", "index"}};
  Rational rendered_total = 0;
  for (std::size_t i = 0; i < report.firms.size(); ++i) {
    rows.push_back({report.firms[i], report.rendered[i], to_fraction_string(report.shares[i]),
                    to_fraction_string(report.index[i].sigma)});
    rendered_total += *parse_rational(report.rendered[i]);
  }
  rows.push_back({"total", render_decimal(rendered_total, report.precision), to_fraction_string(report.share_total()),
                  to_fraction_string(report.index.sigma_total())});

  std::ostringstream out;
  out << render_columns(rows);
  out << "tau " << to_fraction_string(report.tc.total()) << "  alpha " << to_fraction_string(report.weights.alpha())
      << "  beta " << to_fraction_string(report.weights.beta()) << "\n";
  out << "efficiency residual " << to_fraction_string(report.efficiency_residual) << "\n";
  for (const auto& check : report.checks) out << render_property_line(check, &report.firms);
  return out.str();
}

std::string render_index_table(const std::vector<std::string>& firms, const ISIndexVector& index) {
  std::vector<std::vector<std::string>> rows{{"firm", "physical", "institutional", "sigma"}};
  for (std::size_t i = 0; i < index.size(); ++i) {
    rows.push_back({firms.at(i), to_fraction_string(index[i].physical), to_fraction_string(index[i].institutional),
                    to_fraction_string(index[i].sigma)});
  }
  return render_columns(rows);
}

std::string render_centrality_table(const ISGraph& g, int precision) {
  std::vector<std::vector<std::string>> rows{{"firm", "centrality", "decimal"}};
  const auto c = closeness_centralities(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    rows.push_back({g.firm(i), to_fraction_string(c[i]), render_decimal(c[i], precision)});
  }
  return render_columns(rows);
}

std::string render_property_line(const PropertyReport& report, const std::vector<std::string>* firm_ids) {
  std::ostringstream out;
  out << report.property << " [" << report.subject << "]: " << (report.holds ? "holds" : "VIOLATED") << " ("
      << report.instances_checked << " checked)";
  if (report.counterexample) {
    const auto& c = *report.counterexample;
    out << "; " << c.relation << " fails with lhs " << to_fraction_string(c.lhs) << ", rhs "
        << to_fraction_string(c.rhs);
    for (std::size_t k = 0; k < c.coalitions.size(); ++k) {
      out << (k == 0 ? "; S = " : ", T = ") << to_string(c.coalitions[k], firm_ids);
    }
    if (!c.firms.empty()) {
      out << "; firms";
      for (auto i : c.firms) out << " " << firm_label(i, firm_ids);
    }
  }
  out << "\n";
  return out.str();
}

}  // namespace isalloc
