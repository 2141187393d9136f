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

// Permutations whose k-th power is the decreasing permutation i -> n+1-i.
//
// Such a p has p^{2k} = id, so every cycle of p has length dividing 2k but not
// k, i.e. length 2d with d | k and ν₂(d) = ν₂(k); for odd n the middle element
// is fixed. With d_1 < ... < d_r those divisors and a_i the number of
// 2d_i-cycles, Σ a_i d_i = ⌊n/2⌋ and the count is
//
//     Σ over (a_1..a_r) of  ⌊n/2⌋! · Π 2^{a_i(d_i−1)} / Π (a_i! · d_i^{a_i}).

#include <cstdint>
#include <string>
#include <vector>

#include "permstat/error.hpp"
#include "permstat/number_theory.hpp"

namespace permstat {

struct MaxDescentProfile {
  std::int64_t k = 0;
  std::vector<std::int64_t> d_list;  // divisors of k with ν₂(d) = ν₂(k), ascending
  std::size_t r() const noexcept { return d_list.size(); }
};

struct SknTuple {
  std::vector<std::int64_t> a;
  friend bool operator==(const SknTuple&, const SknTuple&) = default;
  friend auto operator<=>(const SknTuple&, const SknTuple&) = default;
};

inline MaxDescentProfile max_descent_profile(std::int64_t k) {
  if (k < 1) throw error(errc::non_positive, "k must be >= 1");
  MaxDescentProfile p;
  p.k = k;
  const int v = nu2(k);
  for (std::int64_t d : divisors(k)) {
    if (nu2(d) == v) p.d_list.push_back(d);
  }
  return p;
}

/// All (a_1..a_r) with Σ a_i d_i = ⌊n/2⌋, ascending lexicographically.
inline std::vector<SknTuple> enumerate_Skn(std::int64_t n, std::int64_t k) {
  if (n < 1) throw error(errc::non_positive, "n must be >= 1");
  const auto prof = max_descent_profile(k);
  const std::int64_t half = n / 2;
  std::vector<SknTuple> out;
  std::vector<std::int64_t> a(prof.r(), 0);
  auto rec = [&](auto&& self, std::size_t at, std::int64_t remaining) -> void {
    if (at == a.size()) {
      if (remaining == 0) out.push_back(SknTuple{a});
      return;
    }
    for (std::int64_t v = 0; v * prof.d_list[at] <= remaining; ++v) {
      a[at] = v;
      self(self, at + 1, remaining - v * prof.d_list[at]);
    }
    a[at] = 0;
  };
  rec(rec, 0, half);
  return out;
}

/// n ≡ 0 or 1 (mod 2^{ν₂(k)+1}); otherwise no k-th root of the decreasing
/// permutation exists.
inline bool decreasing_power_feasible(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) throw error(errc::non_positive, "n and k must be >= 1");
  const std::int64_t mod = std::int64_t{2} << nu2(k);
  const std::int64_t rem = n % mod;
  return rem == 0 || rem == 1;
}

inline BigNat decreasing_power_count(std::int64_t n, std::int64_t k) {
  const auto prof = max_descent_profile(k);
  const BigNat half_fact = factorial(n / 2);
  BigNat total = 0;
  for (const auto& tuple : enumerate_Skn(n, k)) {
    BigNat num = half_fact;
    BigNat den = 1;
    for (std::size_t t = 0; t < prof.r(); ++t) {
      const std::int64_t a = tuple.a[t], d = prof.d_list[t];
      num *= pow2(a * (d - 1));
      den *= factorial(a);
      for (std::int64_t c = 0; c < a; ++c) den *= d;
    }
    total += exact_div(num, den, "decreasing_power_count");
  }
  return total;
}

}  // namespace permstat
