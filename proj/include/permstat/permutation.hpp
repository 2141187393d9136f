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

// Permutations of [n] in one-line form, their cycle structure, powers, and the
// elementary statistics (descents, ascents, inversions, non-inversions).
//
// All positions and values in the public interface are 1-based: for a
// permutation p of size n, p(i) is the image of i for i in [1, n].

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/error.hpp"

namespace permstat {

class Permutation;

namespace detail {
struct PermutationAccess;
}  // namespace detail

/// A bijection on [n], n >= 1, stored as its one-line word p(1), ..., p(n).
class Permutation {
 public:
  /// Validates that `values` is a permutation of [n] for n = values.size().
  static Permutation from_word(std::span<const int> values) {
    if (values.empty()) throw error(errc::empty, "permutation must have n >= 1");
    const auto n = values.size();
    std::vector<bool> seen(n + 1, false);
    for (int v : values) {
      if (v < 1 || static_cast<std::size_t>(v) > n) {
        throw error(errc::out_of_range,
                    "value " + std::to_string(v) + " outside [1, " +
                        std::to_string(n) + "]");
      }
      if (seen[v]) {
        throw error(errc::duplicate_value,
                    "value " + std::to_string(v) + " appears twice");
      }
      seen[v] = true;
    }
    return Permutation(std::vector<int>(values.begin(), values.end()));
  }

  static Permutation from_word(std::initializer_list<int> values) {
    return from_word(std::span<const int>(values.begin(), values.size()));
  }

  static Permutation identity(int n) {
    if (n < 1) throw error(errc::empty, "permutation must have n >= 1");
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  int size() const noexcept { return static_cast<int>(word_.size()); }

  /// Image of position i (1-based). No bounds check.
  int operator()(int i) const noexcept { return word_[static_cast<std::size_t>(i - 1)]; }

  /// Image of position i (1-based), bounds-checked.
  int at(int i) const {
    if (i < 1 || i > size()) {
      throw error(errc::index_out_of_range,
                  "position " + std::to_string(i) + " outside [1, " +
                      std::to_string(size()) + "]");
    }
    return (*this)(i);
  }

  std::span<const int> word() const noexcept { return word_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < word_.size(); ++i) {
      if (word_[i] != static_cast<int>(i + 1)) return false;
    }
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> w) : word_(std::move(w)) {}

  std::vector<int> word_;

  friend struct detail::PermutationAccess;
};

namespace detail {

// Grants the enumeration kernels in-place access to an already-valid word.
struct PermutationAccess {
  static Permutation adopt(std::vector<int> w) { return Permutation(std::move(w)); }
  static std::vector<int>& word(Permutation& p) { return p.word_; }
};

}  // namespace detail

/// Canonical cycle form: each cycle starts at its minimum, cycles sorted by
/// minimum. Fixed points appear as 1-cycles.
struct CycleDecomposition {
  int n = 0;
  std::vector<std::vector<int>> cycles;

  std::vector<int> lengths() const {
    std::vector<int> out;
    out.reserve(cycles.size());
    for (const auto& c : cycles) out.push_back(static_cast<int>(c.size()));
    return out;
  }

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

// Statistics on raw one-line words (1-based values). The Permutation
// overloads below forward here.
namespace words {

inline int descent_count(std::span<const int> w) noexcept {
  int d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
  return d;
}

inline std::int64_t inversion_count(std::span<const int> w) noexcept {
  std::int64_t inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) inv += w[i] > w[j];
  }
  return inv;
}

/// Writes w^k into `out` by advancing each element k mod (cycle length)
/// steps along its cycle. `out` must have w.size() entries and not alias w.
inline void power_into(std::span<const int> w, std::uint64_t k, std::span<int> out) {
  const std::size_t n = w.size();
  std::vector<int> cycle;
  cycle.reserve(n);
  std::fill(out.begin(), out.end(), 0);
  for (std::size_t start = 1; start <= n; ++start) {
    if (out[start - 1] != 0) continue;
    cycle.clear();
    int x = static_cast<int>(start);
    do {
      cycle.push_back(x);
      x = w[static_cast<std::size_t>(x - 1)];
    } while (x != static_cast<int>(start));
    const std::size_t len = cycle.size();
    const std::size_t shift = static_cast<std::size_t>(k % len);
    for (std::size_t t = 0; t < len; ++t) {
      out[static_cast<std::size_t>(cycle[t] - 1)] = cycle[(t + shift) % len];
    }
  }
}

}  // namespace words

inline int descent_count(const Permutation& p) noexcept { return words::descent_count(p.word()); }

inline int ascent_count(const Permutation& p) noexcept {
  return p.size() - 1 - descent_count(p);
}

inline std::int64_t inversion_count(const Permutation& p) noexcept {
  return words::inversion_count(p.word());
}

inline std::int64_t non_inversion_count(const Permutation& p) noexcept {
  const std::int64_t n = p.size();
  return n * (n - 1) / 2 - inversion_count(p);
}

/// At most one descent.
inline bool is_grassmannian(const Permutation& p) noexcept { return descent_count(p) <= 1; }

inline bool has_fixed_point(const Permutation& p) noexcept {
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) == i) return true;
  }
  return false;
}

inline Permutation power(const Permutation& p, std::uint64_t k) {
  std::vector<int> out(static_cast<std::size_t>(p.size()));
  words::power_into(p.word(), k, out);
  return detail::PermutationAccess::adopt(std::move(out));
}

/// (a ∘ b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw error(errc::size_mismatch, "compose of sizes " + std::to_string(a.size()) +
                                         " and " + std::to_string(b.size()));
  }
  std::vector<int> out(static_cast<std::size_t>(a.size()));
  for (int i = 1; i <= a.size(); ++i) out[static_cast<std::size_t>(i - 1)] = a(b(i));
  return detail::PermutationAccess::adopt(std::move(out));
}

inline Permutation inverse(const Permutation& p) {
  std::vector<int> out(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) out[static_cast<std::size_t>(p(i) - 1)] = i;
  return detail::PermutationAccess::adopt(std::move(out));
}

/// i -> n + 1 - i.
inline Permutation decreasing(int n) {
  if (n < 1) throw error(errc::empty, "permutation must have n >= 1");
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
  return detail::PermutationAccess::adopt(std::move(w));
}

/// p(i) ≡ i + s (mod n), values taken in [1, n].
inline Permutation cyclic_shift(int n, int s) {
  if (n < 1) throw error(errc::empty, "permutation must have n >= 1");
  if (s < 0 || s > n - 1) {
    throw error(errc::shift_out_of_range,
                "shift " + std::to_string(s) + " outside [0, " + std::to_string(n - 1) + "]");
  }
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i - 1)] = (i - 1 + s) % n + 1;
  return detail::PermutationAccess::adopt(std::move(w));
}

/// Returns s in [0, n-1] when p(i) ≡ i + s (mod n) for all i.
inline std::optional<int> shift_amount(const Permutation& p) noexcept {
  const int n = p.size();
  const int s = (p(1) - 1) % n;
  for (int i = 1; i <= n; ++i) {
    if (p(i) != (i - 1 + s) % n + 1) return std::nullopt;
  }
  return s;
}

inline CycleDecomposition cycle_decomposition(const Permutation& p) {
  CycleDecomposition cd;
  cd.n = p.size();
  std::vector<bool> seen(static_cast<std::size_t>(p.size()) + 1, false);
  // Scanning starts in increasing order, so each cycle is discovered from its
  // minimum and cycles come out sorted by minimum.
  for (int start = 1; start <= p.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    int x = start;
    do {
      seen[x] = true;
      cycle.push_back(x);
      x = p(x);
    } while (x != start);
    cd.cycles.push_back(std::move(cycle));
  }
  return cd;
}

/// Inverse of cycle_decomposition. The cycles need not be canonical but must
/// partition [n].
inline Permutation recompose(const CycleDecomposition& cd) {
  if (cd.n < 1) throw error(errc::empty, "permutation must have n >= 1");
  std::vector<int> w(static_cast<std::size_t>(cd.n), 0);
  for (const auto& cycle : cd.cycles) {
    for (std::size_t t = 0; t < cycle.size(); ++t) {
      const int x = cycle[t];
      if (x < 1 || x > cd.n) {
        throw error(errc::out_of_range, "cycle element " + std::to_string(x) + " outside [1, " +
                                            std::to_string(cd.n) + "]");
      }
      if (w[static_cast<std::size_t>(x - 1)] != 0) {
        throw error(errc::duplicate_value, "element " + std::to_string(x) + " in two cycles");
      }
      w[static_cast<std::size_t>(x - 1)] = cycle[(t + 1) % cycle.size()];
    }
  }
  for (int i = 1; i <= cd.n; ++i) {
    if (w[static_cast<std::size_t>(i - 1)] == 0) {
      throw error(errc::out_of_range, "element " + std::to_string(i) + " missing from cycles");
    }
  }
  return detail::PermutationAccess::adopt(std::move(w));
}

/// Least k >= 1 with p^k = id.
inline std::uint64_t order(const Permutation& p) {
  std::uint64_t l = 1;
  for (int len : cycle_decomposition(p).lengths()) l = std::lcm(l, static_cast<std::uint64_t>(len));
  return l;
}

/// Restriction of p to a p-invariant set of positions, relabelled
/// order-preservingly to [support.size()].
inline Permutation restrict_to(const Permutation& p, std::vector<int> support) {
  std::sort(support.begin(), support.end());
  if (support.empty()) throw error(errc::empty, "empty support");
  std::vector<int> rank(static_cast<std::size_t>(p.size()) + 1, 0);
  for (std::size_t t = 0; t < support.size(); ++t) {
    if (support[t] < 1 || support[t] > p.size()) {
      throw error(errc::out_of_range, "support element outside [1, n]");
    }
    rank[support[t]] = static_cast<int>(t + 1);
  }
  std::vector<int> w;
  w.reserve(support.size());
  for (int x : support) {
    const int r = rank[p(x)];
    if (r == 0) throw error(errc::invalid_query, "support is not invariant under p");
    w.push_back(r);
  }
  return Permutation::from_word(w);
}

// Text formats: one-line "3,4,5,8,1,2,6,7" and cycles "(1 3 5)(2 4)".

inline std::string to_string(const Permutation& p) {
  std::string out;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(p(i));
  }
  return out;
}

inline std::string to_cycle_string(const CycleDecomposition& cd) {
  std::string out;
  for (const auto& c : cd.cycles) {
    out += '(';
    for (std::size_t t = 0; t < c.size(); ++t) {
      if (t > 0) out += ' ';
      out += std::to_string(c[t]);
    }
    out += ')';
  }
  return out;
}

inline std::string to_cycle_string(const Permutation& p) {
  return to_cycle_string(cycle_decomposition(p));
}

namespace detail {

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

inline int parse_int(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  if (s.empty()) throw error(errc::parse_error, "empty field");
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw error(errc::parse_error, "bad digit in '" + std::string(s) + "'");
    v = v * 10 + (c - '0');
    if (v > 1'000'000) throw error(errc::parse_error, "value too large");
  }
  return v;
}

}  // namespace detail

/// Parses the comma-separated one-line format.
inline Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    values.push_back(detail::parse_int(text.substr(pos, comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Permutation::from_word(values);
}

/// Parses "(1 3 5)(2 4)". Elements not mentioned are fixed points; n defaults
/// to the largest element mentioned.
inline Permutation parse_cycles(std::string_view text, std::optional<int> n = std::nullopt) {
  CycleDecomposition cd;
  std::size_t pos = 0;
  int largest = 0;
  while (pos < text.size()) {
    if (detail::is_space(text[pos])) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw error(errc::parse_error, "expected '('");
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw error(errc::parse_error, "missing ')'");
    std::vector<int> cycle;
    std::string_view body = text.substr(pos + 1, close - pos - 1);
    std::size_t p = 0;
    while (p < body.size()) {
      while (p < body.size() && (detail::is_space(body[p]) || body[p] == ',')) ++p;
      if (p >= body.size()) break;
      std::size_t q = p;
      while (q < body.size() && !detail::is_space(body[q]) && body[q] != ',') ++q;
      cycle.push_back(detail::parse_int(body.substr(p, q - p)));
      largest = std::max(largest, cycle.back());
      p = q;
    }
    if (cycle.empty()) throw error(errc::parse_error, "empty cycle");
    cd.cycles.push_back(std::move(cycle));
    pos = close + 1;
  }
  cd.n = n.value_or(largest);
  if (cd.n < largest) throw error(errc::out_of_range, "cycle element exceeds n");
  std::vector<bool> mentioned(static_cast<std::size_t>(cd.n) + 1, false);
  for (const auto& c : cd.cycles) {
    for (int x : c) {
      if (x < 1) throw error(errc::out_of_range, "cycle element must be >= 1");
      if (mentioned[x]) throw error(errc::duplicate_value, "element " + std::to_string(x) + " repeated");
      mentioned[x] = true;
    }
  }
  for (int x = 1; x <= cd.n; ++x) {
    if (!mentioned[x]) cd.cycles.push_back({x});
  }
  return recompose(cd);
}

}  // namespace permstat
