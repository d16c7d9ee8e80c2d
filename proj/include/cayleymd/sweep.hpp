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

// Verification sweep: every Abelian group of each order (one per isomorphism
// class), every generating connection set up to a size cap, solved exactly
// and compared against both prediction variants.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cayleymd/cayley.hpp"
#include "cayleymd/errors.hpp"
#include "cayleymd/families.hpp"
#include "cayleymd/graph.hpp"
#include "cayleymd/group.hpp"
#include "cayleymd/metric.hpp"
#include "cayleymd/predict.hpp"

namespace cayleymd {

/// Which prediction variant decides the match flag.
enum class GateVariant { as_stated, proof_consistent, both };

inline GateVariant parse_gate_variant(std::string_view s) {
  if (s == "as-stated") return GateVariant::as_stated;
  if (s == "proof-consistent") return GateVariant::proof_consistent;
  if (s == "both") return GateVariant::both;
  throw ParseError("unknown variant '" + std::string(s) + "' (as-stated|proof-consistent|both)");
}

struct SweepOptions {
  std::size_t max_set_size = 3;
  std::size_t cap = kDefaultDimensionCap;
  GateVariant variant = GateVariant::proof_consistent;
  std::size_t jobs = 1;
  std::size_t order_cap = AbelianGroup::kDefaultOrderCap;
};

namespace flag {
inline constexpr std::string_view cycle_case = "cycle-case";
inline constexpr std::string_view characterized = "characterized-family";
inline constexpr std::string_view cap_exceeded = "cap-exceeded";
inline constexpr std::string_view as_stated_mismatch = "as-stated-mismatch";
inline constexpr std::string_view proof_consistent_mismatch = "proof-consistent-mismatch";
inline constexpr std::string_view stated_conflict = "stated-claims-conflict";
inline constexpr std::string_view landmark_degree = "landmark-degree-violation";
inline constexpr std::string_view non_unique_geodesic = "non-unique-geodesic-violation";
inline constexpr std::string_view landmark_in_s = "landmark-in-connection-set-violation";
inline constexpr std::string_view cubic_bipartite = "cubic-bipartite-violation";
inline constexpr std::string_view distance_step = "distance-step-violation";
}  // namespace flag

struct SweepRecord {
  std::string group;
  std::string set;
  std::size_t n = 0;
  std::size_t degree = 0;
  bool bipartite = false;
  bool cyclic = false;
  std::optional<std::size_t> dim;
  std::size_t cap = 0;
  std::vector<Vertex> witness;
  std::vector<std::string> witness_labels;
  PredictionPair predictions;
  Prediction bipartite_bound;
  std::size_t resolving_pair_count = 0;
  bool match_as_stated = true;
  bool match_proof_consistent = true;
  bool match = true;
  std::vector<std::string> flags;

  bool has_flag(std::string_view f) const {
    return std::find(flags.begin(), flags.end(), f) != flags.end();
  }
  bool property_violation() const {
    for (auto f : {flag::landmark_degree, flag::non_unique_geodesic, flag::landmark_in_s,
                   flag::cubic_bipartite, flag::distance_step}) {
      if (has_flag(f)) return true;
    }
    return false;
  }
  std::string dim_string() const {
    return dim ? std::to_string(*dim) : ">=" + std::to_string(cap + 1);
  }
};

/// Solves one Cayley instance and runs every applicable check.
inline SweepRecord evaluate_instance(const AbelianGroup& group, const ConnectionSet& set,
                                     const SweepOptions& options) {
  SweepRecord r;
  r.group = group.literal();
  r.set = format_connection_set(group, set);
  r.n = group.order();
  r.degree = set.size();
  r.cyclic = group.is_cyclic();
  r.cap = options.cap;

  const Graph g = build_cayley(group, set);
  const DistanceMatrix dist = all_pairs_distances(g);
  r.bipartite = is_bipartite(g);
  if (!distance_step_check(g, dist)) r.flags.emplace_back(flag::distance_step);

  const MetricDimensionResult solved = metric_dimension(g, dist, options.cap);
  r.dim = solved.dimension;
  r.witness = solved.landmarks;
  for (Vertex w : solved.landmarks) r.witness_labels.push_back(g.label(w));
  if (solved.exceeds_cap()) r.flags.emplace_back(flag::cap_exceeded);

  r.predictions = predict_characterization(group, set);
  r.bipartite_bound = predict_cubic_bipartite(g);

  const bool bound_ok = r.bipartite_bound.consistent_with(r.dim, r.cap);
  if (!bound_ok) r.flags.emplace_back(flag::cubic_bipartite);
  r.match_as_stated = r.predictions.as_stated.consistent_with(r.dim, r.cap) && bound_ok;
  r.match_proof_consistent = r.predictions.proof_consistent.consistent_with(r.dim, r.cap) && bound_ok;
  switch (options.variant) {
    case GateVariant::as_stated: r.match = r.match_as_stated; break;
    case GateVariant::proof_consistent: r.match = r.match_proof_consistent; break;
    case GateVariant::both: r.match = r.match_as_stated && r.match_proof_consistent; break;
  }

  const auto& notes = r.predictions.proof_consistent.notes;
  if (std::find(notes.begin(), notes.end(), kCycleCaseNote) != notes.end()) {
    r.flags.emplace_back(flag::cycle_case);
  } else if (r.predictions.proof_consistent.claims_two()) {
    r.flags.emplace_back(flag::characterized);
  }
  if (!r.match_as_stated) r.flags.emplace_back(flag::as_stated_mismatch);
  if (!r.match_proof_consistent) r.flags.emplace_back(flag::proof_consistent_mismatch);
  const auto& stated_notes = r.predictions.as_stated.notes;
  if (std::find(stated_notes.begin(), stated_notes.end(), kStatedConflictNote) != stated_notes.end()) {
    r.flags.emplace_back(flag::stated_conflict);
  }

  // Post-hoc structure of every resolving pair.
  if (r.dim && *r.dim == 2) {
    const auto pairs = resolving_pairs(g, dist);
    r.resolving_pair_count = pairs.size();
    bool degree_bad = false;
    bool geodesic_bad = false;
    for (auto [a, b] : pairs) {
      degree_bad |= g.degree(a) > 3 || g.degree(b) > 3;
      geodesic_bad |= count_shortest_paths(g, a, b, dist) != 1;
    }
    if (degree_bad) r.flags.emplace_back(flag::landmark_degree);
    if (geodesic_bad) r.flags.emplace_back(flag::non_unique_geodesic);
    const AvoidanceReport avoid = check_resolving_set_avoids_s(group, set, g, dist);
    if (avoid.applicable && !avoid.holds()) r.flags.emplace_back(flag::landmark_in_s);
  }
  return r;
}

namespace detail {

/// Runs `work(i)` for i in [0, count) on `jobs` threads.
template <typename Work>
void parallel_for(std::size_t count, std::size_t jobs, Work&& work) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) work(i);
    });
  }
}

}  // namespace detail

/// Records for orders lo..hi inclusive, in (order, group, connection set)
/// order regardless of `options.jobs`.
inline std::vector<SweepRecord> run_sweep(std::size_t lo, std::size_t hi, const SweepOptions& options = {}) {
  if (lo < 2 || lo > hi) throw Error("sweep order range must satisfy 2 <= lo <= hi");
  if (hi > options.order_cap) {
    throw GroupTooLargeError("sweep order " + std::to_string(hi) + " exceeds the order cap " +
                             std::to_string(options.order_cap));
  }
  std::vector<std::pair<AbelianGroup, ConnectionSet>> instances;
  for (std::size_t n = lo; n <= hi; ++n) {
    for (const auto& group : abelian_groups_of_order(n, options.order_cap)) {
      for (auto& set : enumerate_connection_sets(group, options.max_set_size, /*generating_only=*/true)) {
        instances.emplace_back(group, std::move(set));
      }
    }
  }
  std::vector<SweepRecord> records(instances.size());
  detail::parallel_for(instances.size(), options.jobs, [&](std::size_t i) {
    records[i] = evaluate_instance(instances[i].first, instances[i].second, options);
  });
  return records;
}

/// True when any row disagrees with the gated prediction variant. Property
/// violations are reported in the flags but do not fail the sweep.
inline bool sweep_failed(const std::vector<SweepRecord>& records) {
  return std::any_of(records.begin(), records.end(), [](const SweepRecord& r) { return !r.match; });
}

struct MobiusRow {
  std::size_t param = 0;
  MobiusConvention convention = MobiusConvention::vertices;
  std::size_t vertices = 0;
  std::optional<std::size_t> dim;
  Prediction stated;     // ladder claim on `param`
  Prediction circulant;  // antipodal circulant claim on `vertices`
  bool stated_ok = false;
  bool circulant_ok = false;
};

struct MobiusReport {
  std::vector<MobiusRow> rows;
  std::size_t max_param = 0;
  /// Conventions under which every n = 2 (mod 8) row matches the exact claim.
  std::vector<MobiusConvention> branch_consistent;
  /// Conventions under which every row matches the ladder claim.
  std::vector<MobiusConvention> fully_consistent;

  std::optional<MobiusConvention> verdict() const {
    if (branch_consistent.size() == 1) return branch_consistent.front();
    return std::nullopt;
  }
};

/// Solves the ladder for every even parameter 8..max_param under both
/// readings of the parameter.
inline MobiusReport run_mobius_crosscheck(std::size_t max_param = 24, std::size_t cap = kDefaultDimensionCap,
                                          std::size_t jobs = 1) {
  MobiusReport report;
  report.max_param = max_param;
  for (auto conv : {MobiusConvention::vertices, MobiusConvention::rungs}) {
    for (std::size_t p = 8; p <= max_param; p += 2) {
      MobiusRow row;
      row.param = p;
      row.convention = conv;
      row.vertices = mobius_vertex_count(p, conv);
      report.rows.push_back(row);
    }
  }
  detail::parallel_for(report.rows.size(), jobs, [&](std::size_t i) {
    MobiusRow& row = report.rows[i];
    const Graph g = mobius_ladder(row.param, row.convention);
    const DistanceMatrix dist = all_pairs_distances(g);
    row.dim = metric_dimension(g, dist, cap).dimension;
    row.stated = predict_mobius(row.param);
    row.circulant = predict_circulant_antipodal(row.vertices);
    row.stated_ok = row.stated.consistent_with(row.dim, cap);
    row.circulant_ok = row.circulant.consistent_with(row.dim, cap);
  });
  for (auto conv : {MobiusConvention::vertices, MobiusConvention::rungs}) {
    bool branch = true;
    bool full = true;
    for (const auto& row : report.rows) {
      if (row.convention != conv) continue;
      full &= row.stated_ok;
      if (row.param % 8 == 2) branch &= row.stated_ok;
    }
    if (branch) report.branch_consistent.push_back(conv);
    if (full) report.fully_consistent.push_back(conv);
  }
  return report;
}

}  // namespace cayleymd
