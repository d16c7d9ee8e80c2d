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

// Closed-form metric dimension claims for the Cayley and ladder families.
//
// Claims about cyclic groups with S = {i, -i, n/2} come in two variants:
//   as-stated        : dimension 2 iff gcd(i, n/2) = 1 and n = 2 (mod 4);
//   proof-consistent : dimension 2 iff gcd(i, n) = 2 and n = 2 (mod 4), and
//                      when gcd(i, n) = 1 the graph is the antipodal
//                      circulant Cay(Z_n, {1, -1, n/2}), whose dimension is
//                      3 for n = 0 (mod 4) and 4 for n = 2 (mod 4).
// The variants disagree exactly when n = 2 (mod 4) and i is odd with
// gcd(i, n) = 1, e.g. Cay(Z6, {1, 5, 3}). Both are always reported.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cayleymd/cayley.hpp"
#include "cayleymd/errors.hpp"
#include "cayleymd/graph.hpp"
#include "cayleymd/group.hpp"
#include "cayleymd/metric.hpp"

namespace cayleymd {

/// Which closed-form statement a prediction comes from.
enum class Claim {
  none,
  prism,                 // dim(P_m x C_n) = 2 (n odd), 3 (n even, m >= 2)
  mobius_ladder,         // 3 for n = 2 (mod 8), between 3 and 4 otherwise
  circulant_antipodal,   // Cay(Z_n,{1,-1,n/2}): 3 (n = 0 mod 4), 4 (n = 2 mod 4)
  cubic_bipartite,       // 3-regular bipartite graphs have dimension >= 3
  cyclic_step,           // Cay(Z_n,{i,-i,n/2}) dimension-2 condition
  noncyclic_abelian,     // non-cyclic Abelian of order > 4: never dimension 2
  characterization,      // the full Abelian dimension-2 characterization
  degree_bound,          // dimension 2 forces landmark degree <= 3
  cycle,                 // cycles have dimension 2
};

inline std::string_view to_string(Claim c) {
  switch (c) {
    case Claim::none: return "none";
    case Claim::prism: return "prism";
    case Claim::mobius_ladder: return "mobius-ladder";
    case Claim::circulant_antipodal: return "circulant-antipodal";
    case Claim::cubic_bipartite: return "cubic-bipartite";
    case Claim::cyclic_step: return "cyclic-step";
    case Claim::noncyclic_abelian: return "noncyclic-abelian";
    case Claim::characterization: return "characterization";
    case Claim::degree_bound: return "degree-bound";
    case Claim::cycle: return "cycle";
  }
  return "none";
}

enum class Variant { as_stated, proof_consistent };

inline std::string_view to_string(Variant v) {
  return v == Variant::as_stated ? "as-stated" : "proof-consistent";
}

struct Prediction {
  enum class Kind { exact, interval, not_two, no_claim };

  Kind kind = Kind::no_claim;
  std::size_t lo = 0;
  std::size_t hi = 0;
  Claim source = Claim::none;
  Variant variant = Variant::proof_consistent;
  std::vector<std::string> notes;

  static Prediction exact(std::size_t k, Claim c, Variant v) { return {Kind::exact, k, k, c, v, {}}; }
  static Prediction interval(std::size_t lo, std::size_t hi, Claim c, Variant v) {
    if (lo > hi) throw Error("interval prediction needs lo <= hi");
    return {Kind::interval, lo, hi, c, v, {}};
  }
  static Prediction not_two(Claim c, Variant v) { return {Kind::not_two, 0, 0, c, v, {}}; }
  static Prediction no_claim(Claim c, Variant v) { return {Kind::no_claim, 0, 0, c, v, {}}; }

  bool claims_two() const { return kind == Kind::exact && lo == 2; }

  /// Solver value `dim` (empty: above `cap`) agrees with this claim.
  bool consistent_with(std::optional<std::size_t> dim, std::size_t cap) const {
    switch (kind) {
      case Kind::exact: return dim ? *dim == lo : lo > cap;
      case Kind::interval: return dim ? (lo <= *dim && *dim <= hi) : hi > cap;
      case Kind::not_two: return !dim || *dim != 2;
      case Kind::no_claim: return true;
    }
    return true;
  }

  /// "2", "[3,4]", "not 2", "no claim".
  std::string value_string() const {
    switch (kind) {
      case Kind::exact: return std::to_string(lo);
      case Kind::interval: return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
      case Kind::not_two: return "not 2";
      case Kind::no_claim: return "no claim";
    }
    return "no claim";
  }

  /// "2 (cyclic-step)".
  std::string describe() const { return value_string() + " (" + std::string(to_string(source)) + ")"; }
};

struct PredictionPair {
  Prediction as_stated;
  Prediction proof_consistent;

  const Prediction& get(Variant v) const {
    return v == Variant::as_stated ? as_stated : proof_consistent;
  }
};

inline PredictionPair same_both(Prediction p) {
  PredictionPair out{p, p};
  out.as_stated.variant = Variant::as_stated;
  out.proof_consistent.variant = Variant::proof_consistent;
  return out;
}

inline constexpr std::string_view kCycleCaseNote = "cycle-case";
/// The as-stated dimension-2 condition and the antipodal circulant claim
/// disagree on this instance.
inline constexpr std::string_view kStatedConflictNote = "conflicts-with-circulant-antipodal";

/// Prism P_m x C_n; no claim outside m >= 2, n >= 3.
inline Prediction predict_prism(std::size_t m, std::size_t n) {
  if (m < 2 || n < 3) return Prediction::no_claim(Claim::prism, Variant::as_stated);
  return Prediction::exact(n % 2 == 1 ? 2 : 3, Claim::prism, Variant::as_stated);
}

/// Mobius ladder claim stated on the parameter n (even, >= 8). The claim does
/// not fix whether n counts vertices or rungs.
inline Prediction predict_mobius(std::size_t n) {
  if (n < 8 || n % 2 != 0) return Prediction::no_claim(Claim::mobius_ladder, Variant::as_stated);
  if (n % 8 == 2) return Prediction::exact(3, Claim::mobius_ladder, Variant::as_stated);
  return Prediction::interval(3, 4, Claim::mobius_ladder, Variant::as_stated);
}

/// Cay(Z_n, {g, -g, n/2}) with g a generator.
inline Prediction predict_circulant_antipodal(std::size_t n) {
  if (n < 4 || n % 2 != 0) return Prediction::no_claim(Claim::circulant_antipodal, Variant::as_stated);
  return Prediction::exact(n % 4 == 0 ? 3 : 4, Claim::circulant_antipodal, Variant::as_stated);
}

/// Connected 3-regular bipartite graphs: dimension >= 3.
inline Prediction predict_cubic_bipartite(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 4 || !is_regular(g, 3) || !is_bipartite(g) || !is_connected(g)) {
    return Prediction::no_claim(Claim::cubic_bipartite, Variant::as_stated);
  }
  return Prediction::interval(3, n - 1, Claim::cubic_bipartite, Variant::as_stated);
}

/// Cay(Z_n, {i, -i, n/2}) for even n >= 6 with a generating 3-element set.
inline PredictionPair predict_cyclic_involution(std::size_t n, std::int64_t i) {
  const auto sn = static_cast<std::int64_t>(n);
  const std::int64_t r = sn > 0 ? ((i % sn) + sn) % sn : 0;
  const std::size_t g_n = std::gcd(static_cast<std::size_t>(r), n);
  const bool valid = n >= 6 && n % 2 == 0 && r != 0 && 2 * static_cast<std::size_t>(r) != n &&
                     std::gcd(g_n, n / 2) == 1;
  if (!valid) return same_both(Prediction::no_claim(Claim::cyclic_step, Variant::as_stated));

  const std::size_t g_half = std::gcd(static_cast<std::size_t>(r), n / 2);
  const bool n_mod4_is_2 = n % 4 == 2;

  PredictionPair out;
  if (g_half == 1 && n_mod4_is_2) {
    out.as_stated = Prediction::exact(2, Claim::cyclic_step, Variant::as_stated);
    if (g_n == 1) out.as_stated.notes.emplace_back(kStatedConflictNote);
  } else if (g_n == 1) {
    out.as_stated = predict_circulant_antipodal(n);
    out.as_stated.variant = Variant::as_stated;
  } else {
    out.as_stated = Prediction::not_two(Claim::cyclic_step, Variant::as_stated);
  }

  if (g_n == 1) {
    out.proof_consistent = predict_circulant_antipodal(n);
  } else if (g_n == 2 && n_mod4_is_2) {
    out.proof_consistent = Prediction::exact(2, Claim::cyclic_step, Variant::proof_consistent);
  } else {
    out.proof_consistent = Prediction::not_two(Claim::cyclic_step, Variant::proof_consistent);
  }
  out.proof_consistent.variant = Variant::proof_consistent;
  return out;
}


/// Dimension-2 characterization for Cay(G, S), G Abelian of order > 4.
/// The cycle case S = {u, -u} is predicted 2 by the proof-consistent variant
/// and marked with the "cycle-case" note, since the literal characterization
/// only admits three-element sets.
inline PredictionPair predict_characterization(const AbelianGroup& group, const ConnectionSet& set) {
  if (group.order() <= 4 || !group.is_generating(set.elements())) {
    return same_both(Prediction::no_claim(Claim::characterization, Variant::as_stated));
  }
  if (!group.is_cyclic()) {
    return same_both(Prediction::not_two(Claim::noncyclic_abelian, Variant::as_stated));
  }
  const std::size_t n = group.order();
  std::vector<std::uint64_t> coords;
  for (const auto& s : set.elements()) coords.push_back(group.cyclic_coordinate(s));
  std::sort(coords.begin(), coords.end());

  if (set.size() == 2) {
    // The only involution of Z_n is n/2, so a 2-set is {u, -u}; generating
    // makes the graph the n-cycle.
    PredictionPair out;
    out.as_stated = Prediction::not_two(Claim::characterization, Variant::as_stated);
    out.proof_consistent = Prediction::exact(2, Claim::cycle, Variant::proof_consistent);
    out.as_stated.notes.emplace_back(kCycleCaseNote);
    out.proof_consistent.notes.emplace_back(kCycleCaseNote);
    return out;
  }
  if (set.size() != 3) {
    PredictionPair out;
    out.as_stated = Prediction::not_two(Claim::characterization, Variant::as_stated);
    out.proof_consistent = Prediction::not_two(Claim::degree_bound, Variant::proof_consistent);
    return out;
  }
  // Three elements: {i, -i, n/2}.
  std::uint64_t step = 0;
  for (std::uint64_t c : coords) {
    if (2 * c != n) {
      step = c;
      break;
    }
  }
  const auto step_pair = predict_cyclic_involution(n, static_cast<std::int64_t>(step));
  PredictionPair out;
  const bool literal_two =
      n % 4 == 2 && std::gcd<std::uint64_t, std::uint64_t>(step, n / 2) == 1;
  out.as_stated = literal_two ? Prediction::exact(2, Claim::characterization, Variant::as_stated)
                              : Prediction::not_two(Claim::characterization, Variant::as_stated);
  if (literal_two && std::gcd<std::uint64_t, std::uint64_t>(step, n) == 1) {
    out.as_stated.notes.emplace_back(kStatedConflictNote);
  }
  out.proof_consistent = step_pair.proof_consistent;
  return out;
}

/// Result of checking that no resolving pair of Cay(G,S), translated so one
/// landmark is the identity, has its other landmark in S.
struct AvoidanceReport {
  bool applicable = false;
  std::string skipped_reason;
  std::size_t pairs_checked = 0;
  std::vector<VertexPair> violations;

  bool holds() const { return violations.empty(); }
};

inline AvoidanceReport check_resolving_set_avoids_s(const AbelianGroup& group, const ConnectionSet& set,
                                                    const Graph& g, const DistanceMatrix& dist) {
  AvoidanceReport out;
  if (!dist.all_finite()) {
    out.skipped_reason = "graph is disconnected";
    return out;
  }
  if (is_cycle_graph(g)) {
    out.skipped_reason = "graph is a cycle";
    return out;
  }
  if (is_path_graph(g)) {
    out.skipped_reason = "graph is a path";
    return out;
  }
  const auto pairs = resolving_pairs(g, dist);
  if (pairs.empty()) {
    out.skipped_reason = "dimension is not two";
    return out;
  }
  out.applicable = true;
  for (auto [a, b] : pairs) {
    ++out.pairs_checked;
    // Translating by -a sends {a, b} to {e, b - a}.
    const GroupElement w = group.add(group.element_at(b), group.inverse(group.element_at(a)));
    if (set.contains(w)) out.violations.emplace_back(a, b);
  }
  return out;
}

}  // namespace cayleymd
