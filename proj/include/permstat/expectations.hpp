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

// Closed forms for the mean number of descents and inversions of p^k over
// all p in S_n, and for the number of p with p^k sending a fixed pair of
// distinct positions (i, j) to a given pair of distinct values (x, y).
//
// Write τ, σ, τ_o for the number of divisors, the divisor sum and the number
// of odd divisors of k, and let c(k) = τ² − τ − τ_o + σ. For n >= 2k + 1
//
//   E[des(p^k)] = (n − 1)/2 − c(k) / (2n)
//   E[inv(p^k)] = n(n − 1)/4 − (τ − 1) n / 6 − c(k) / 12
//
// The descent formula also holds down to n >= k + ℓ(k), ℓ(k) the largest
// proper divisor of k (every n when k = 1). The inversion formula is only
// exposed on n >= 2k + 1.

#include <algorithm>
#include <cstdint>
#include <string>

#include "permstat/error.hpp"
#include "permstat/number_theory.hpp"

namespace permstat {

enum class ValidityRange { theorem, extended };

struct ExpectationQuery {
  std::int64_t n = 0;
  std::int64_t k = 0;

  /// n >= 2k + 1.
  bool theorem_range() const noexcept { return n >= 2 * k + 1; }

  /// k = 1, or n >= k + ℓ(k).
  bool extended_descent_range() const {
    if (k == 1) return n >= 1;
    return n >= k + *divisor_profile(k).largest_proper;
  }
};

/// One query of the five-way pair classification, for the brute-force side.
struct PairCountQuery {
  int n = 0;
  std::uint64_t k = 0;
  int i = 0, j = 0;
  int x = 0, y = 0;
};

namespace detail {

inline void require_positive(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) {
    throw error(errc::non_positive,
                "n and k must be positive (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
}

inline void require_min_degree(std::int64_t n, std::int64_t k, std::int64_t floor_n) {
  require_positive(n, k);
  const std::int64_t need = std::max(floor_n, 2 * k + 1);
  if (n < need) {
    throw error(errc::out_of_validity_range,
                "n=" + std::to_string(n) + " below " + std::to_string(need) + " for k=" + std::to_string(k));
  }
}

}  // namespace detail

/// τ² − τ − τ_o + σ; always even.
inline std::int64_t correction_numerator(std::int64_t k) {
  const auto p = divisor_profile(k);
  return p.tau * p.tau - p.tau - p.tau_odd + p.sigma;
}

inline ExactRational expected_descents(std::int64_t n, std::int64_t k,
                                       ValidityRange range = ValidityRange::theorem) {
  detail::require_positive(n, k);
  const ExpectationQuery q{n, k};
  const bool ok = range == ValidityRange::theorem ? q.theorem_range()
                                                  : (q.theorem_range() || q.extended_descent_range());
  if (!ok) {
    throw error(errc::out_of_validity_range,
                "descent formula not valid at n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                    (range == ValidityRange::theorem ? " (theorem range n >= 2k+1)"
                                                     : " (extended range n >= k + l(k))"));
  }
  return ExactRational(n - 1, 2) - ExactRational(correction_numerator(k), 2 * n);
}

inline ExactRational expected_inversions(std::int64_t n, std::int64_t k) {
  detail::require_min_degree(n, k, 1);
  const auto p = divisor_profile(k);
  return ExactRational(n * (n - 1), 4) - ExactRational((p.tau - 1) * n, 6) -
         ExactRational(correction_numerator(k), 12);
}

/// x, y both outside {i, j}.
inline BigNat pair_count_generic(std::int64_t n, std::int64_t k) {
  detail::require_min_degree(n, k, 4);
  const auto p = divisor_profile(k);
  const std::int64_t poly = n * n - (2 * p.tau + 3) * n + p.tau * p.tau + 3 * p.tau + p.tau_odd + p.sigma;
  return BigNat(poly) * factorial(n - 4);
}

/// p^k(i) = i, p^k(j) = y with y outside {i, j}.
inline BigNat pair_count_i_to_i(std::int64_t n, std::int64_t k) {
  detail::require_min_degree(n, k, 3);
  const auto p = divisor_profile(k);
  return BigNat(p.tau * n - p.tau * p.tau - p.sigma) * factorial(n - 3);
}

/// p^k(i) = j, p^k(j) = y with y outside {i, j}.
inline BigNat pair_count_i_to_j(std::int64_t n, std::int64_t k) {
  detail::require_min_degree(n, k, 3);
  const auto p = divisor_profile(k);
  return BigNat(n - p.tau - p.tau_odd) * factorial(n - 3);
}

/// p^k(i) = i, p^k(j) = j.
inline BigNat pair_count_both_fixed(std::int64_t n, std::int64_t k) {
  detail::require_min_degree(n, k, 2);
  const auto p = divisor_profile(k);
  return BigNat(p.tau * p.tau - p.tau + p.sigma) * factorial(n - 2);
}

/// p^k(i) = j, p^k(j) = i.
inline BigNat pair_count_swap(std::int64_t n, std::int64_t k) {
  detail::require_min_degree(n, k, 2);
  return BigNat(divisor_profile(k).tau_odd) * factorial(n - 2);
}

}  // namespace permstat
