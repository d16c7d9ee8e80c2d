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

// Finite Abelian groups in direct-product form Z_{f1} x ... x Z_{fk}.
//
// Elements are residue tuples, reduced componentwise on construction so that
// equality is structural. Elements are enumerated in mixed-radix order with
// the first factor most significant; that index is the vertex index used by
// every Cayley graph built on the group.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cayleymd/errors.hpp"

namespace cayleymd {

struct GroupElement {
  std::vector<std::uint32_t> residues;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

inline std::int64_t parse_int(std::string_view s) {
  std::string t = trim(s);
  if (t.empty()) throw ParseError("expected an integer, got empty string");
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(t, &pos);
  } catch (const std::exception&) {
    throw ParseError("not an integer: '" + t + "'");
  }
  if (pos != t.size()) throw ParseError("not an integer: '" + t + "'");
  return v;
}

/// Prime-power decomposition, ascending primes.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> prime_powers(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;  // (prime, prime^e)
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    std::uint64_t q = 1;
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    out.emplace_back(p, q);
  }
  if (n > 1) out.emplace_back(n, n);
  return out;
}

}  // namespace detail

/// Invariant factors d1 | d2 | ... | dr (ascending) of Z_{f1} x ... x Z_{fk}.
/// Two direct products are isomorphic iff their invariant factors agree.
inline std::vector<std::uint32_t> invariant_factors(std::span<const std::uint32_t> factors) {
  std::map<std::uint64_t, std::vector<std::uint64_t>> by_prime;
  for (std::uint32_t f : factors) {
    for (auto [p, q] : detail::prime_powers(f)) by_prime[p].push_back(q);
  }
  std::size_t rank = 0;
  for (auto& [p, qs] : by_prime) {
    std::sort(qs.begin(), qs.end(), std::greater<>());
    rank = std::max(rank, qs.size());
  }
  // Position j (from the top) collects the j-th largest power of each prime.
  std::vector<std::uint32_t> out(rank, 1);
  for (const auto& [p, qs] : by_prime) {
    for (std::size_t j = 0; j < qs.size(); ++j) out[rank - 1 - j] *= static_cast<std::uint32_t>(qs[j]);
  }
  return out;
}

class AbelianGroup {
 public:
  static constexpr std::size_t kDefaultOrderCap = 256;

  explicit AbelianGroup(std::vector<std::uint32_t> factors,
                        std::size_t order_cap = kDefaultOrderCap)
      : factors_(std::move(factors)) {
    if (factors_.empty()) throw ParseError("a group needs at least one cyclic factor");
    std::size_t order = 1;
    for (std::uint32_t f : factors_) {
      if (f < 2) throw ParseError("cyclic factor moduli must be >= 2, got " + std::to_string(f));
      if (order > order_cap) break;
      order *= f;
    }
    if (order > order_cap) {
      throw GroupTooLargeError("group " + literal_of(factors_) + " exceeds the order cap " +
                               std::to_string(order_cap));
    }
    order_ = order;
  }

  const std::vector<std::uint32_t>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::size_t order() const { return order_; }

  /// Canonical element from arbitrary (possibly negative) integers.
  GroupElement element(std::span<const std::int64_t> values) const {
    if (values.size() != factors_.size()) {
      throw GroupShapeError("element has " + std::to_string(values.size()) +
                            " components, group " + literal() + " has " +
                            std::to_string(factors_.size()));
    }
    GroupElement g;
    g.residues.resize(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      const auto f = static_cast<std::int64_t>(factors_[i]);
      g.residues[i] = static_cast<std::uint32_t>(((values[i] % f) + f) % f);
    }
    return g;
  }
  GroupElement element(std::initializer_list<std::int64_t> values) const {
    return element(std::span<const std::int64_t>(values.begin(), values.size()));
  }

  GroupElement identity() const { return GroupElement{std::vector<std::uint32_t>(rank(), 0)}; }

  bool contains(const GroupElement& g) const {
    if (g.residues.size() != factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (g.residues[i] >= factors_[i]) return false;
    }
    return true;
  }

  GroupElement add(const GroupElement& g, const GroupElement& h) const {
    check(g);
    check(h);
    GroupElement r;
    r.residues.resize(rank());
    for (std::size_t i = 0; i < rank(); ++i) r.residues[i] = (g.residues[i] + h.residues[i]) % factors_[i];
    return r;
  }

  GroupElement inverse(const GroupElement& g) const {
    check(g);
    GroupElement r;
    r.residues.resize(rank());
    for (std::size_t i = 0; i < rank(); ++i) r.residues[i] = (factors_[i] - g.residues[i]) % factors_[i];
    return r;
  }

  /// k·g for any integer k.
  GroupElement multiple(const GroupElement& g, std::int64_t k) const {
    check(g);
    std::vector<std::int64_t> v(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      const auto f = static_cast<std::int64_t>(factors_[i]);
      v[i] = (static_cast<std::int64_t>(g.residues[i]) * (k % f)) % f;
    }
    return element(v);
  }

  /// Smallest t >= 1 with t·g = e.
  std::uint64_t element_order(const GroupElement& g) const {
    check(g);
    std::uint64_t t = 1;
    for (std::size_t i = 0; i < rank(); ++i) {
      const std::uint64_t f = factors_[i];
      t = std::lcm(t, f / std::gcd<std::uint64_t, std::uint64_t>(g.residues[i], f));
    }
    return t;
  }

  std::size_t index_of(const GroupElement& g) const {
    check(g);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < rank(); ++i) idx = idx * factors_[i] + g.residues[i];
    return idx;
  }

  GroupElement element_at(std::size_t index) const {
    if (index >= order_) throw VertexRangeError("element index out of range");
    GroupElement g;
    g.residues.resize(rank());
    for (std::size_t i = rank(); i-- > 0;) {
      g.residues[i] = static_cast<std::uint32_t>(index % factors_[i]);
      index /= factors_[i];
    }
    return g;
  }

  /// All elements in canonical (index) order.
  std::vector<GroupElement> elements() const {
    std::vector<GroupElement> out;
    out.reserve(order_);
    for (std::size_t i = 0; i < order_; ++i) out.push_back(element_at(i));
    return out;
  }

  /// <S>: closure of S ∪ {e} under addition, sorted.
  std::vector<GroupElement> subgroup_generated(std::span<const GroupElement> gens) const {
    for (const auto& g : gens) check(g);
    std::vector<char> seen(order_, 0);
    std::vector<std::size_t> frontier{index_of(identity())};
    seen[frontier.front()] = 1;
    while (!frontier.empty()) {
      std::vector<std::size_t> next;
      for (std::size_t idx : frontier) {
        const GroupElement x = element_at(idx);
        for (const auto& s : gens) {
          const std::size_t y = index_of(add(x, s));
          if (!seen[y]) {
            seen[y] = 1;
            next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<GroupElement> out;
    for (std::size_t i = 0; i < order_; ++i) {
      if (seen[i]) out.push_back(element_at(i));
    }
    return out;
  }

  bool is_generating(std::span<const GroupElement> gens) const {
    return subgroup_generated(gens).size() == order_;
  }

  bool is_inverse_closed(std::span<const GroupElement> set) const {
    std::set<GroupElement> members(set.begin(), set.end());
    return std::all_of(set.begin(), set.end(),
                       [&](const GroupElement& g) { return members.count(inverse(g)) != 0; });
  }

  /// Cyclic iff the factors are pairwise coprime.
  bool is_cyclic() const {
    std::uint64_t l = 1;
    for (std::uint32_t f : factors_) l = std::lcm<std::uint64_t, std::uint64_t>(l, f);
    return l == order_;
  }

  std::vector<std::uint32_t> invariant_factors() const { return cayleymd::invariant_factors(factors_); }

  /// Residue of g in Z_n under the isomorphism sending (1,...,1) to 1.
  /// Only defined for cyclic groups.
  std::uint64_t cyclic_coordinate(const GroupElement& g) const {
    check(g);
    if (!is_cyclic()) throw GroupShapeError("group " + literal() + " is not cyclic");
    for (std::uint64_t x = 0; x < order_; ++x) {
      bool ok = true;
      for (std::size_t i = 0; i < rank() && ok; ++i) ok = (x % factors_[i]) == g.residues[i];
      if (ok) return x;
    }
    throw GroupShapeError("unreachable: CRT failed");
  }

  std::string literal() const { return literal_of(factors_); }

  std::string format(const GroupElement& g) const {
    check(g);
    if (rank() == 1) return std::to_string(g.residues[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < rank(); ++i) {
      if (i) s += ',';
      s += std::to_string(g.residues[i]);
    }
    return s + ")";
  }

  /// Accepts "3", "(3)", "(1,3)".
  GroupElement parse_element(std::string_view text) const {
    std::string t = detail::trim(text);
    if (!t.empty() && t.front() == '(') {
      if (t.back() != ')') throw ParseError("unbalanced parentheses in element '" + t + "'");
      t = t.substr(1, t.size() - 2);
    }
    std::vector<std::int64_t> values;
    for (const auto& part : detail::split(t, ',')) values.push_back(detail::parse_int(part));
    return element(values);
  }

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  static std::string literal_of(const std::vector<std::uint32_t>& factors) {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += 'x';
      s += 'Z' + std::to_string(factors[i]);
    }
    return s;
  }

  void check(const GroupElement& g) const {
    if (!contains(g)) throw GroupShapeError("element does not belong to group " + literal());
  }

  std::vector<std::uint32_t> factors_;
  std::size_t order_ = 0;
};

/// Parses "Z6", "Z2xZ4", "z2XZ2xZ2".
inline AbelianGroup parse_group(std::string_view text,
                                std::size_t order_cap = AbelianGroup::kDefaultOrderCap) {
  std::string t = detail::trim(text);
  std::string lower;
  for (char c : t) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower.empty()) throw ParseError("empty group literal");
  std::vector<std::uint32_t> factors;
  for (const auto& part : detail::split(lower, 'x')) {
    if (part.size() < 2 || part[0] != 'z') throw ParseError("bad cyclic factor '" + part + "' in '" + t + "'");
    const std::int64_t m = detail::parse_int(part.substr(1));
    if (m < 2 || m > static_cast<std::int64_t>(order_cap)) {
      throw ParseError("cyclic factor out of range in '" + t + "'");
    }
    factors.push_back(static_cast<std::uint32_t>(m));
  }
  return AbelianGroup(std::move(factors), order_cap);
}

/// One representative per isomorphism class of Abelian groups of order n,
/// written in invariant-factor form. Cyclic group first, then by rank and
/// lexicographic factor list.
inline std::vector<AbelianGroup> abelian_groups_of_order(
    std::size_t n, std::size_t order_cap = AbelianGroup::kDefaultOrderCap) {
  if (n < 2) return {};
  // Multisets of factors >= 2 with product n, deduplicated by signature.
  std::set<std::vector<std::uint32_t>> signatures;
  std::vector<std::uint32_t> current;
  auto rec = [&](auto&& self, std::size_t remaining, std::uint32_t min_factor) -> void {
    if (remaining == 1) {
      if (!current.empty()) signatures.insert(invariant_factors(current));
      return;
    }
    for (std::uint32_t f = min_factor; f <= remaining; ++f) {
      if (remaining % f != 0) continue;
      current.push_back(f);
      self(self, remaining / f, f);
      current.pop_back();
    }
  };
  rec(rec, n, 2);
  std::vector<std::vector<std::uint32_t>> sorted(signatures.begin(), signatures.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<AbelianGroup> out;
  for (auto& s : sorted) out.emplace_back(std::move(s), order_cap);
  return out;
}

}  // namespace cayleymd
