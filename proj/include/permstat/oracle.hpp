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

// Brute-force ground truth over S_n. Every quantity here is computed from
// the definitions on explicit permutations; nothing calls a closed form.
//
// S_n is walked in lexicographic order of one-line words. For parallel scans
// the rank interval [0, n!) is cut into contiguous ranges, each started by
// unranking in the factorial number system and stepped with
// std::next_permutation.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "permstat/error.hpp"
#include "permstat/expectations.hpp"  // PairCountQuery
#include "permstat/number_theory.hpp"
#include "permstat/permutation.hpp"

namespace permstat::oracle {

inline constexpr int kMaxDegree = 10;

enum class Statistic { descents, inversions, ascents, non_inversions };

inline std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

/// Lexicographic rank of a one-line word among all words of S_n.
inline std::uint64_t rank(const Permutation& p) {
  const int n = p.size();
  if (n > 20) throw error(errc::degree_too_large, "rank needs n <= 20");
  std::uint64_t r = 0;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= n; ++i) {
    int smaller = 0;
    for (int v = 1; v < p(i); ++v) smaller += !used[v];
    used[p(i)] = true;
    r += static_cast<std::uint64_t>(smaller) * factorial_u64(n - i);
  }
  return r;
}

inline Permutation unrank(int n, std::uint64_t r) {
  if (n < 1) throw error(errc::empty, "permutation must have n >= 1");
  if (n > 20) throw error(errc::degree_too_large, "unrank needs n <= 20");
  if (r >= factorial_u64(n)) throw error(errc::out_of_range, "rank >= n!");
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> w;
  w.reserve(pool.size());
  for (int i = n; i >= 1; --i) {
    const std::uint64_t f = factorial_u64(i - 1);
    const auto digit = static_cast<std::size_t>(r / f);
    r %= f;
    w.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return detail::PermutationAccess::adopt(std::move(w));
}

/// Worker count from PERMSTAT_WORKERS, else the hardware thread count.
inline int default_workers() {
  if (const char* env = std::getenv("PERMSTAT_WORKERS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct RankRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;  // exclusive
};

struct EnumerationPlan {
  int n = 1;
  int partitions = 1;

  /// Contiguous rank ranges covering [0, n!) exactly once, in order.
  std::vector<RankRange> ranges() const {
    const std::uint64_t total = factorial_u64(n);
    const auto parts = static_cast<std::uint64_t>(std::max(1, partitions));
    std::vector<RankRange> out;
    for (std::uint64_t t = 0; t < parts; ++t) {
      const std::uint64_t b = total * t / parts;
      const std::uint64_t e = total * (t + 1) / parts;
      if (b < e) out.push_back({b, e});
    }
    return out;
  }
};

inline void check_degree(int n) {
  if (n < 1) throw error(errc::invalid_query, "degree must be >= 1");
  if (n > kMaxDegree) {
    throw error(errc::degree_too_large,
                "n=" + std::to_string(n) + " exceeds oracle guard " + std::to_string(kMaxDegree));
  }
}

/// Calls fn(p) for every p with rank in [r.begin, r.end), in lexicographic order.
template <class Fn>
void for_each_in_range(int n, RankRange r, Fn&& fn) {
  if (r.begin >= r.end) return;
  Permutation p = unrank(n, r.begin);
  auto& w = detail::PermutationAccess::word(p);
  for (std::uint64_t t = r.begin; t < r.end; ++t) {
    fn(static_cast<const Permutation&>(p));
    std::next_permutation(w.begin(), w.end());
  }
}

template <class Fn>
void for_each_permutation(int n, Fn&& fn) {
  check_degree(n);
  for_each_in_range(n, RankRange{0, factorial_u64(n)}, std::forward<Fn>(fn));
}

/// Sum of value(p) over S_n, fanned out over `workers` threads. `value` must
/// be pure and return an unsigned integer.
template <class Fn>
std::uint64_t parallel_sum(int n, Fn value, int workers = default_workers()) {
  check_degree(n);
  const auto ranges = EnumerationPlan{n, std::max(1, workers)}.ranges();
  std::vector<std::uint64_t> partial(ranges.size(), 0);
  auto run = [&](std::size_t t) {
    std::uint64_t acc = 0;
    for_each_in_range(n, ranges[t], [&](const Permutation& p) { acc += value(p); });
    partial[t] = acc;
  };
  if (ranges.size() == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(ranges.size());
    for (std::size_t t = 0; t < ranges.size(); ++t) pool.emplace_back(run, t);
  }
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

struct StatisticReport {
  int n = 0;
  std::uint64_t k = 0;
  BigNat total;
  ExactRational mean;
};

inline std::int64_t evaluate(Statistic stat, const Permutation& q) {
  switch (stat) {
    case Statistic::descents: return descent_count(q);
    case Statistic::ascents: return ascent_count(q);
    case Statistic::inversions: return inversion_count(q);
    case Statistic::non_inversions: return non_inversion_count(q);
  }
  return 0;
}

/// Sum and mean of stat(p^k) over S_n.
inline StatisticReport mean_statistic(int n, std::uint64_t k, Statistic stat,
                                      int workers = default_workers()) {
  const std::uint64_t total = parallel_sum(
      n,
      [&](const Permutation& p) {
        return static_cast<std::uint64_t>(evaluate(stat, power(p, k)));
      },
      workers);
  StatisticReport rep;
  rep.n = n;
  rep.k = k;
  rep.total = total;
  rep.mean = ExactRational(rep.total, factorial(n));
  return rep;
}

/// |{p in S_n : pred(p)}|.
template <class Pred>
BigNat count_matching(int n, Pred pred, int workers = default_workers()) {
  return BigNat(parallel_sum(
      n, [&](const Permutation& p) -> std::uint64_t { return pred(p) ? 1 : 0; }, workers));
}

/// Collects every p in S_n satisfying pred, in lexicographic order.
template <class Pred>
std::vector<Permutation> find_all(int n, Pred pred) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) {
    if (pred(p)) out.push_back(p);
  });
  return out;
}

/// |{p in S_n : p^k(i) = x, p^k(j) = y}|.
inline BigNat brute_pair_count(const PairCountQuery& q, int workers = default_workers()) {
  check_degree(q.n);
  auto in = [&](int v) { return v >= 1 && v <= q.n; };
  if (!in(q.i) || !in(q.j) || !in(q.x) || !in(q.y) || q.i == q.j || q.x == q.y) {
    throw error(errc::invalid_query, "need distinct i, j and distinct x, y in [1, n]");
  }
  return count_matching(
      q.n,
      [&](const Permutation& p) {
        const Permutation pk = power(p, q.k);
        return pk(q.i) == q.x && pk(q.j) == q.y;
      },
      workers);
}

inline BigNat brute_pair_count(int n, std::uint64_t k, int i, int j, int x, int y,
                               int workers = default_workers()) {
  return brute_pair_count(PairCountQuery{n, k, i, j, x, y}, workers);
}

}  // namespace permstat::oracle
