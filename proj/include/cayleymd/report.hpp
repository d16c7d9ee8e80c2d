// Copyright 2026 The cayleymd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON and CSV renderings of witnesses, sweep records and ladder reports.

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cayleymd/graph.hpp"
#include "cayleymd/metric.hpp"
#include "cayleymd/sweep.hpp"

namespace cayleymd {

/// {"dim": k, "landmarks": [...], "representations": [...]}; "dim" is null and
/// "exceeds_cap" set when the search stopped at the cap.
inline nlohmann::ordered_json witness_to_json(const MetricDimensionResult& result, const Graph& g,
                                              const DistanceMatrix& dist, bool with_table) {
  nlohmann::ordered_json j;
  if (result.dimension) {
    j["dim"] = *result.dimension;
  } else {
    j["dim"] = nullptr;
    j["exceeds_cap"] = result.cap;
  }
  j["landmarks"] = result.landmarks;
  if (g.has_labels()) {
    auto labels = nlohmann::ordered_json::array();
    for (Vertex w : result.landmarks) labels.push_back(g.label(w));
    j["landmark_labels"] = labels;
  }
  if (with_table && !result.landmarks.empty()) {
    auto table = nlohmann::ordered_json::array();
    for (Vertex u = 0; u < g.vertex_count(); ++u) table.push_back(representation(dist, u, result.landmarks));
    j["representations"] = table;
  }
  return j;
}

namespace detail {

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace detail

inline constexpr std::string_view kSweepCsvHeader =
    "group,set,n,degree,bipartite,dim,witness,pred_as_stated,pred_proof_consistent,match,flags";

inline std::string records_to_csv(const std::vector<SweepRecord>& records) {
  std::ostringstream out;
  out << kSweepCsvHeader << "\n";
  for (const auto& r : records) {
    out << detail::csv_field(r.group) << ',' << detail::csv_field(r.set) << ',' << r.n << ',' << r.degree << ','
        << (r.bipartite ? "true" : "false") << ',' << detail::csv_field(r.dim_string()) << ','
        << detail::csv_field(detail::join(r.witness_labels, " ")) << ','
        << detail::csv_field(r.predictions.as_stated.describe()) << ','
        << detail::csv_field(r.predictions.proof_consistent.describe()) << ',' << (r.match ? "true" : "false")
        << ',' << detail::csv_field(detail::join(r.flags, ";")) << "\n";
  }
  return out.str();
}

inline nlohmann::ordered_json record_to_json(const SweepRecord& r) {
  nlohmann::ordered_json j;
  j["group"] = r.group;
  j["set"] = r.set;
  j["n"] = r.n;
  j["degree"] = r.degree;
  j["bipartite"] = r.bipartite;
  j["dim"] = r.dim ? nlohmann::ordered_json(*r.dim) : nlohmann::ordered_json(nullptr);
  j["witness"] = r.witness_labels;
  j["pred_as_stated"] = r.predictions.as_stated.describe();
  j["pred_proof_consistent"] = r.predictions.proof_consistent.describe();
  j["match"] = r.match;
  j["flags"] = r.flags;
  return j;
}

inline std::string records_to_json(const std::vector<SweepRecord>& records) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : records) arr.push_back(record_to_json(r));
  return arr.dump(2) + "\n";
}

inline nlohmann::ordered_json mobius_report_to_json(const MobiusReport& report) {
  nlohmann::ordered_json j;
  j["max_param"] = report.max_param;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json r;
    r["param"] = row.param;
    r["convention"] = to_string(row.convention);
    r["vertices"] = row.vertices;
    r["dim"] = row.dim ? nlohmann::ordered_json(*row.dim) : nlohmann::ordered_json(nullptr);
    r["ladder_claim"] = row.stated.value_string();
    r["ladder_claim_ok"] = row.stated_ok;
    r["circulant_claim"] = row.circulant.value_string();
    r["circulant_claim_ok"] = row.circulant_ok;
    rows.push_back(r);
  }
  j["rows"] = rows;
  auto names = [](const std::vector<MobiusConvention>& cs) {
    auto a = nlohmann::ordered_json::array();
    for (auto c : cs) a.push_back(to_string(c));
    return a;
  };
  j["branch_consistent"] = names(report.branch_consistent);
  j["fully_consistent"] = names(report.fully_consistent);
  j["verdict"] = report.verdict() ? nlohmann::ordered_json(to_string(*report.verdict()))
                                  : nlohmann::ordered_json(nullptr);
  return j;
}

inline std::string mobius_report_to_text(const MobiusReport& report) {
  std::ostringstream out;
  out << "param convention vertices dim ladder_claim ok circulant_claim ok\n";
  for (const auto& row : report.rows) {
    out << row.param << ' ' << to_string(row.convention) << ' ' << row.vertices << ' '
        << (row.dim ? std::to_string(*row.dim) : "?") << ' ' << row.stated.value_string() << ' '
        << (row.stated_ok ? "yes" : "NO") << ' ' << row.circulant.value_string() << ' '
        << (row.circulant_ok ? "yes" : "NO") << "\n";
  }
  out << "verdict: ";
  if (auto v = report.verdict()) {
    out << "the n = 2 (mod 8) ladder claim agrees with the solver only under the '" << to_string(*v)
        << "' convention\n";
  } else {
    out << "no unique convention (" << report.branch_consistent.size() << " consistent)\n";
  }
  return out.str();
}

}  // namespace cayleymd
