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

// Divisor functions, the Möbius function, factorials, binomials and the exact
// integer/rational types every closed form in this library is evaluated in.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permstat/error.hpp"

namespace permstat {

/// Arbitrary-precision integer. Counts are non-negative by construction.
using BigNat = boost::multiprecision::cpp_int;

/// Arbitrary-precision fraction, kept in lowest terms with positive
/// denominator after every operation.
using ExactRational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const ExactRational& q) {
  const BigNat num = boost::multiprecision::numerator(q);
  const BigNat den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline std::string to_string(const BigNat& v) { return v.str(); }

struct DivisorProfile {
  std::int64_t k = 0;
  std::vector<std::int64_t> divisors;  // ascending
  std::int64_t tau = 0;
  std::int64_t sigma = 0;
  int nu2 = 0;
  std::int64_t tau_odd = 0;
  std::optional<std::int64_t> largest_proper;  // absent for k = 1
};

inline std::vector<std::int64_t> divisors(std::int64_t k) {
  if (k < 1) throw error(errc::non_positive, "divisors of " + std::to_string(k));
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= k; ++d) {
    if (k % d != 0) continue;
    small.push_back(d);
    if (d != k / d) large.push_back(k / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline int nu2(std::int64_t k) {
  if (k < 1) throw error(errc::non_positive, "nu2 of " + std::to_string(k));
  int v = 0;
  while (k % 2 == 0) {
    k /= 2;
    ++v;
  }
  return v;
}

inline DivisorProfile divisor_profile(std::int64_t k) {
  if (k < 1) throw error(errc::non_positive, "divisor profile of " + std::to_string(k));
  DivisorProfile p;
  p.k = k;
  p.divisors = divisors(k);
  p.tau = static_cast<std::int64_t>(p.divisors.size());
  p.sigma = std::accumulate(p.divisors.begin(), p.divisors.end(), std::int64_t{0});
  p.nu2 = nu2(k);
  p.tau_odd = static_cast<std::int64_t>(divisors(k >> p.nu2).size());
  if (k >= 2) p.largest_proper = p.divisors[p.divisors.size() - 2];
  return p;
}

inline int mobius(std::int64_t d) {
  if (d < 1) throw error(errc::non_positive, "mobius of " + std::to_string(d));
  int sign = 1;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    d /= p;
    if (d % p == 0) return 0;
    sign = -sign;
  }
  if (d > 1) sign = -sign;
  return sign;
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

inline BigNat factorial(std::int64_t n) {
  if (n < 0) throw error(errc::non_positive, "factorial of " + std::to_string(n));
  BigNat r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

/// C(n, k); zero outside 0 <= k <= n.
inline BigNat binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw error(errc::non_positive, "binomial with n = " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigNat r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) here
  }
  return r;
}

/// C(n, k) for an arbitrary-precision top argument; used with N_d, which for
/// large d does not fit a machine word.
inline BigNat binomial(const BigNat& n, std::int64_t k) {
  if (n < 0) throw error(errc::non_positive, "binomial with negative n");
  if (k < 0 || BigNat(k) > n) return 0;
  BigNat r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigNat pow2(std::int64_t e) {
  if (e < 0) throw error(errc::non_positive, "negative exponent");
  BigNat r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

/// Quotient a / b, which must be exact.
inline BigNat exact_div(const BigNat& a, const BigNat& b, const char* where) {
  BigNat q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) {
    throw error(errc::theorem_violation, std::string("non-integral quotient in ") + where);
  }
  return q;
}

}  // namespace permstat
