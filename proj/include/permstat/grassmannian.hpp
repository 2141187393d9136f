// Copyright 2026 The permstat Authors. All Rights Reserved.
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

// Grassmannian permutations (at most one descent) that are roots of the
// identity, built from Grassmannian cycles.
//
// A Grassmannian p with p(1) != 1, p(n) != n and p^k = id has no fixed points
// and every cycle of p is itself (order-isomorphic to) a Grassmannian cycle
// whose length divides k. Conversely any multiset of such cycles merges into
// exactly one Grassmannian permutation, so these permutations are counted by
// the non-negative solutions of
//
//     sum over d | k, d > 1 of  d * (x_{d,1} + ... + x_{d,N_d}) = n,
//
// N_d being the number of Grassmannian d-cycles.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "permstat/error.hpp"
#include "permstat/number_theory.hpp"
#include "permstat/permutation.hpp"

namespace permstat {

inline constexpr int kMaxCycleEnumerationDegree = 16;

/// A single n-cycle (n >= 2) with exactly one descent.
class GrassCycle {
 public:
  static GrassCycle make(Permutation p) {
    if (p.size() < 2) throw error(errc::degree_too_small, "Grassmannian cycle needs n >= 2");
    if (descent_count(p) != 1) throw error(errc::not_grassmannian, to_string(p) + " does not have one descent");
    if (cycle_decomposition(p).cycles.size() != 1) {
      throw error(errc::invalid_query, to_string(p) + " is not an n-cycle");
    }
    return GrassCycle(std::move(p));
  }

  const Permutation& perm() const noexcept { return perm_; }
  int size() const noexcept { return perm_.size(); }

  friend bool operator==(const GrassCycle&, const GrassCycle&) = default;
  friend auto operator<=>(const GrassCycle&, const GrassCycle&) = default;

 private:
  explicit GrassCycle(Permutation p) : perm_(std::move(p)) {}
  Permutation perm_;
};

/// Number of n-cycles whose only descent is at position i:
/// (1/n) Σ_{d | gcd(i, n)} μ(d) C(n/d, i/d).
inline BigNat n_cycles_with_descent_at(std::int64_t n, std::int64_t i) {
  if (n < 2) throw error(errc::degree_too_small, "need n >= 2");
  if (i < 1 || i > n - 1) {
    throw error(errc::index_out_of_range, "descent position " + std::to_string(i) + " outside [1, n-1]");
  }
  BigNat sum = 0;
  for (std::int64_t d : divisors(gcd(i, n))) sum += mobius(d) * binomial(n / d, i / d);
  return exact_div(sum, BigNat(n), "n_cycles_with_descent_at");
}

/// N_n = (1/n) Σ_{d | n, d != n} μ(d) (2^{n/d} − 2).
inline BigNat grassmannian_cycle_count(std::int64_t n) {
  if (n < 2) throw error(errc::degree_too_small, "need n >= 2");
  BigNat sum = 0;
  for (std::int64_t d : divisors(n)) {
    if (d == n) continue;
    sum += mobius(d) * (pow2(n / d) - 2);
  }
  return exact_div(sum, BigNat(n), "grassmannian_cycle_count");
}

/// All Grassmannian n-cycles, sorted lexicographically by one-line word.
///
/// A permutation with one descent is an increasing run of some value set A
/// followed by an increasing run of its complement, so the candidates are
/// indexed by subsets of [n].
inline std::vector<GrassCycle> enumerate_grassmannian_cycles(int n) {
  if (n < 2) throw error(errc::degree_too_small, "need n >= 2");
  if (n > kMaxCycleEnumerationDegree) {
    throw error(errc::degree_too_large, "cycle enumeration guard is n <= " +
                                            std::to_string(kMaxCycleEnumerationDegree));
  }
  std::vector<GrassCycle> out;
  std::vector<int> w(static_cast<std::size_t>(n));
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::size_t at = 0;
    for (int v = 1; v <= n; ++v) {
      if (mask >> (v - 1) & 1u) w[at++] = v;
    }
    for (int v = 1; v <= n; ++v) {
      if (!(mask >> (v - 1) & 1u)) w[at++] = v;
    }
    if (words::descent_count(w) != 1) continue;
    // n-cycle iff the orbit of 1 has length n.
    int len = 0, x = 1;
    do {
      x = w[static_cast<std::size_t>(x - 1)];
      ++len;
    } while (x != 1);
    if (len == n) out.push_back(GrassCycle::make(Permutation::from_word(w)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct MergeResult {
  Permutation perm;
  std::vector<int> alpha_part;  // positions carrying alpha, ascending
  std::vector<int> beta_part;   // positions carrying beta, ascending
};

namespace detail {

inline void require_mergeable(const Permutation& p, const char* name) {
  if (!is_grassmannian(p)) throw error(errc::not_grassmannian, std::string(name) + " = " + to_string(p));
  if (has_fixed_point(p)) throw error(errc::has_fixed_point, std::string(name) + " = " + to_string(p));
}

// Position t with p(t) = n and p(t+1) = 1; such a t exists for every
// fixed-point-free Grassmannian p.
inline int top_bottom_split(const Permutation& p) {
  for (int t = 1; t < p.size(); ++t) {
    if (p(t) == p.size() && p(t + 1) == 1) return t;
  }
  throw error(errc::theorem_violation, "no n,1 adjacency in " + to_string(p));
}

}  // namespace detail

/// Interleaves fixed-point-free Grassmannian alpha (on [r]) and beta (on [s])
/// into a Grassmannian permutation of [r+s] whose restrictions to the two
/// parts are order-isomorphic to alpha and beta.
///
/// Elements of alpha are written i, elements of beta j̄, and f acts as alpha
/// or beta. With alpha(t) = r, alpha(t+1) = 1 and beta(m) = s̄, beta(m+1) = 1̄
/// the total order starts as
///
///     1 .. t, 1̄ .. m̄, t+1 .. r, (m+1)‾ .. s̄
///
/// whose first t+m entries form the first part. Then, while some i
/// immediately precedes some j̄ in the same part with f(i) after f(j̄) in the
/// current order, the leftmost such pair is swapped. Relabelling the final
/// order by position gives the result.
inline MergeResult merge_with_parts(const Permutation& alpha, const Permutation& beta) {
  detail::require_mergeable(alpha, "alpha");
  detail::require_mergeable(beta, "beta");
  const int r = alpha.size(), s = beta.size(), total = r + s;
  const int t = detail::top_bottom_split(alpha);
  const int m = detail::top_bottom_split(beta);

  // Element ids: alpha's i -> i-1, beta's j̄ -> r+j-1.
  std::vector<int> f(static_cast<std::size_t>(total));
  for (int i = 1; i <= r; ++i) f[i - 1] = alpha(i) - 1;
  for (int j = 1; j <= s; ++j) f[r + j - 1] = r + beta(j) - 1;
  auto from_alpha = [r](int e) { return e < r; };

  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(total));
  for (int i = 1; i <= t; ++i) order.push_back(i - 1);
  for (int j = 1; j <= m; ++j) order.push_back(r + j - 1);
  for (int i = t + 1; i <= r; ++i) order.push_back(i - 1);
  for (int j = m + 1; j <= s; ++j) order.push_back(r + j - 1);

  std::vector<int> pos(static_cast<std::size_t>(total));
  for (int p = 0; p < total; ++p) pos[order[p]] = p;

  const int first_part = t + m;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int p = 0; p + 1 < total; ++p) {
      if ((p < first_part) != (p + 1 < first_part)) continue;
      const int a = order[p], b = order[p + 1];
      if (!from_alpha(a) || from_alpha(b)) continue;
      if (pos[f[a]] > pos[f[b]]) {
        std::swap(order[p], order[p + 1]);
        pos[a] = p + 1;
        pos[b] = p;
        swapped = true;
        break;
      }
    }
  }

  std::vector<int> w(static_cast<std::size_t>(total));
  MergeResult res{Permutation::identity(1), {}, {}};
  for (int p = 0; p < total; ++p) {
    const int e = order[p];
    w[p] = pos[f[e]] + 1;
    (from_alpha(e) ? res.alpha_part : res.beta_part).push_back(p + 1);
  }
  res.perm = Permutation::from_word(w);
  if (!is_grassmannian(res.perm)) {
    throw error(errc::theorem_violation, "merge of " + to_string(alpha) + " and " + to_string(beta) +
                                             " is not Grassmannian: " + to_string(res.perm));
  }
  return res;
}

inline Permutation merge_cycles(const Permutation& alpha, const Permutation& beta) {
  return merge_with_parts(alpha, beta).perm;
}

/// Left fold of merge_cycles over `parts` sorted by (size, one-line word).
inline Permutation merge_all(std::vector<Permutation> parts) {
  if (parts.empty()) throw error(errc::empty, "nothing to merge");
  std::sort(parts.begin(), parts.end(), [](const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  Permutation acc = parts.front();
  for (std::size_t t = 1; t < parts.size(); ++t) acc = merge_cycles(acc, parts[t]);
  return acc;
}

/// One non-negative solution of the cycle-count equation. Keys (d, i) run over
/// divisors 1 < d <= n of k and i in [1, N_d]; larger d are forced to zero
/// and omitted.
struct CompositionSolution {
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> assignment;

  std::int64_t weight() const {
    std::int64_t w = 0;
    for (const auto& [key, x] : assignment) w += key.first * x;
    return w;
  }

  friend bool operator==(const CompositionSolution&, const CompositionSolution&) = default;
};

/// Divisors of k other than 1.
inline std::vector<std::int64_t> nontrivial_divisors(std::int64_t k) {
  auto ds = divisors(k);
  ds.erase(ds.begin());
  return ds;
}

/// Number of non-negative solutions: the coefficient of z^n in
/// Π_{d | k, d > 1} (1 − z^d)^{−N_d}.
inline BigNat count_eq11_solutions(std::int64_t n, std::int64_t k) {
  if (n < 0) throw error(errc::invalid_query, "n must be >= 0");
  if (k < 2) throw error(errc::invalid_query, "k must be >= 2");
  std::vector<BigNat> coeff(static_cast<std::size_t>(n) + 1, 0);
  coeff[0] = 1;
  for (std::int64_t d : nontrivial_divisors(k)) {
    if (d > n) break;
    const BigNat nd = grassmannian_cycle_count(d);
    // (1 − z^d)^{−N} = Σ_m C(N + m − 1, m) z^{dm}
    std::vector<BigNat> series;
    for (std::int64_t mult = 0; mult * d <= n; ++mult) series.push_back(binomial(nd + mult - 1, mult));
    std::vector<BigNat> next(coeff.size(), 0);
    for (std::int64_t e = 0; e <= n; ++e) {
      if (coeff[e] == 0) continue;
      for (std::size_t mult = 0; e + static_cast<std::int64_t>(mult) * d <= n; ++mult) {
        next[e + static_cast<std::int64_t>(mult) * d] += coeff[e] * series[mult];
      }
    }
    coeff = std::move(next);
  }
  return coeff[n];
}

/// Explicit solutions, in lexicographic order of the assignment vector taken
/// over keys (d, i) ascending.
inline std::vector<CompositionSolution> enumerate_eq11_solutions(std::int64_t n, std::int64_t k) {
  if (n < 0) throw error(errc::invalid_query, "n must be >= 0");
  if (k < 2) throw error(errc::invalid_query, "k must be >= 2");
  if (n > kMaxCycleEnumerationDegree) {
    throw error(errc::degree_too_large, "solution enumeration guard is n <= " +
                                            std::to_string(kMaxCycleEnumerationDegree));
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> keys;
  for (std::int64_t d : nontrivial_divisors(k)) {
    if (d > n) break;
    const auto nd = grassmannian_cycle_count(d).convert_to<std::int64_t>();
    for (std::int64_t i = 1; i <= nd; ++i) keys.emplace_back(d, i);
  }
  std::vector<CompositionSolution> out;
  std::vector<std::int64_t> x(keys.size(), 0);
  auto rec = [&](auto&& self, std::size_t at, std::int64_t remaining) -> void {
    if (at == keys.size()) {
      if (remaining != 0) return;
      CompositionSolution sol;
      for (std::size_t t = 0; t < keys.size(); ++t) sol.assignment[keys[t]] = x[t];
      out.push_back(std::move(sol));
      return;
    }
    const std::int64_t d = keys[at].first;
    for (std::int64_t v = 0; v * d <= remaining; ++v) {
      x[at] = v;
      self(self, at + 1, remaining - v * d);
    }
    x[at] = 0;
  };
  rec(rec, 0, n);
  return out;
}

/// True iff p is Grassmannian, p(1) != 1, p(n) != n and p^k = id.
inline bool is_grassmannian_root_with_moved_ends(const Permutation& p, std::uint64_t k) {
  return is_grassmannian(p) && p(1) != 1 && p(p.size()) != p.size() && power(p, k).is_identity();
}

/// Every Grassmannian p in S_n with p(1) != 1, p(n) != n and p^k = id, built by
/// merging the cycles named by each solution. Sorted lexicographically.
inline std::vector<Permutation> enumerate_kth_roots_grassmannian(int n, std::int64_t k) {
  if (n < 1) throw error(errc::empty, "permutation must have n >= 1");
  if (k < 2) throw error(errc::invalid_query, "k must be >= 2");
  if (n > kMaxCycleEnumerationDegree) {
    throw error(errc::degree_too_large, "enumeration guard is n <= " +
                                            std::to_string(kMaxCycleEnumerationDegree));
  }
  std::map<std::int64_t, std::vector<GrassCycle>> cycles_by_length;
  for (std::int64_t d : nontrivial_divisors(k)) {
    if (d > n) break;
    cycles_by_length[d] = enumerate_grassmannian_cycles(static_cast<int>(d));
  }
  std::vector<Permutation> out;
  for (const auto& sol : enumerate_eq11_solutions(n, k)) {
    std::vector<Permutation> parts;
    for (const auto& [key, count] : sol.assignment) {
      const auto& cycle = cycles_by_length.at(key.first).at(static_cast<std::size_t>(key.second - 1));
      for (std::int64_t c = 0; c < count; ++c) parts.push_back(cycle.perm());
    }
    Permutation p = merge_all(std::move(parts));
    if (!is_grassmannian_root_with_moved_ends(p, static_cast<std::uint64_t>(k))) {
      throw error(errc::theorem_violation, "merged permutation " + to_string(p) + " fails the root predicate");
    }
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw error(errc::theorem_violation, "two solutions merged to the same permutation");
  }
  return out;
}

struct CyclicShift {
  int s = 0;  // in [1, n-1]
  friend bool operator==(const CyclicShift&, const CyclicShift&) = default;
};

struct RootOfIdentity {
  friend bool operator==(const RootOfIdentity&, const RootOfIdentity&) = default;
};

struct NotApplicable {
  enum class Reason { not_grassmannian, fixed_endpoint, power_descent_count };
  Reason reason{};
  friend bool operator==(const NotApplicable&, const NotApplicable&) = default;
};

using PowerClassification = std::variant<CyclicShift, RootOfIdentity, NotApplicable>;

inline std::string to_string(const PowerClassification& c) {
  struct Visitor {
    std::string operator()(const CyclicShift& v) const { return "CyclicShift(" + std::to_string(v.s) + ")"; }
    std::string operator()(const RootOfIdentity&) const { return "RootOfIdentity"; }
    std::string operator()(const NotApplicable& v) const {
      switch (v.reason) {
        case NotApplicable::Reason::not_grassmannian: return "NotApplicable(not Grassmannian)";
        case NotApplicable::Reason::fixed_endpoint: return "NotApplicable(fixed endpoint)";
        case NotApplicable::Reason::power_descent_count: return "NotApplicable(des(p^k) != 1)";
      }
      return "NotApplicable";
    }
  };
  return std::visit(Visitor{}, c);
}

/// For k >= 3: a Grassmannian p with p(1) != 1, p(n) != n and des(p^k) = 1 is
/// either a cyclic shift or satisfies p^{k-1} = id. Shifts take precedence
/// when both hold. Throws theorem_violation if neither holds.
inline PowerClassification classify_power_grassmannian(const Permutation& p, std::int64_t k) {
  if (k < 3) throw error(errc::invalid_query, "classifier needs k >= 3");
  if (!is_grassmannian(p)) return NotApplicable{NotApplicable::Reason::not_grassmannian};
  if (p(1) == 1 || p(p.size()) == p.size()) return NotApplicable{NotApplicable::Reason::fixed_endpoint};
  if (descent_count(power(p, static_cast<std::uint64_t>(k))) != 1) {
    return NotApplicable{NotApplicable::Reason::power_descent_count};
  }
  if (const auto s = shift_amount(p); s && *s != 0) return CyclicShift{*s};
  if (power(p, static_cast<std::uint64_t>(k - 1)).is_identity()) return RootOfIdentity{};
  throw error(errc::theorem_violation, to_string(p) + " with k=" + std::to_string(k) +
                                           " is neither a cyclic shift nor a (k-1)-th root of id");
}

}  // namespace permstat
