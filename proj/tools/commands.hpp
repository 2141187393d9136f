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

// Command implementations behind the permstat executable. Kept in a header so
// the tests can drive them in-process.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <json.hpp>

#include "permstat/permstat.hpp"

namespace permstat::cli {

enum class Status { ok, out_of_range, violation };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::out_of_range: return "out_of_range";
    case Status::violation: return "violation";
  }
  return "ok";
}

struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;  // insertion order is column order
  std::string value;
  Status status = Status::ok;
};

enum class Format { text, csv, json };

inline std::optional<Format> parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  return std::nullopt;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// Header row from the first record's parameter names, then value,status.
inline std::string render_csv(const std::vector<OutputRecord>& records) {
  std::ostringstream os;
  if (records.empty()) return "value,status\n";
  for (const auto& [key, _] : records.front().params) os << csv_field(key) << ',';
  os << "value,status\n";
  for (const auto& rec : records) {
    for (const auto& [_, v] : rec.params) os << csv_field(v) << ',';
    os << csv_field(rec.value) << ',' << to_string(rec.status) << '\n';
  }
  return os.str();
}

inline std::string render_json(const std::vector<OutputRecord>& records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& rec : records) {
    nlohmann::ordered_json obj;
    obj["command"] = rec.command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rec.params) params[k] = v;
    obj["params"] = std::move(params);
    obj["value"] = rec.value;
    obj["status"] = to_string(rec.status);
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

/// Aligned columns for terminals.
inline std::string render_text(const std::vector<OutputRecord>& records) {
  if (records.empty()) return "";
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header;
  for (const auto& [k, _] : records.front().params) header.push_back(k);
  header.push_back("value");
  header.push_back("status");
  rows.push_back(header);
  for (const auto& rec : records) {
    std::vector<std::string> row;
    for (const auto& [_, v] : rec.params) row.push_back(v);
    row.push_back(rec.value);
    row.push_back(to_string(rec.status));
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << row[c];
      if (c + 1 < row.size()) os << std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << '\n';
  }
  return os.str();
}

inline std::string render(const std::vector<OutputRecord>& records, Format f) {
  switch (f) {
    case Format::csv: return render_csv(records);
    case Format::json: return render_json(records);
    case Format::text: return render_text(records);
  }
  return {};
}

/// Inclusive range "a..b" or a single integer.
struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

inline IntRange parse_range(const std::string& s) {
  auto to_int = [&](const std::string& part) -> std::int64_t {
    if (part.empty()) throw error(errc::parse_error, "bad range '" + s + "'");
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      throw error(errc::parse_error, "bad range '" + s + "'");
    }
    if (used != part.size()) throw error(errc::parse_error, "bad range '" + s + "'");
    return v;
  };
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const auto v = to_int(s);
    return {v, v};
  }
  IntRange r{to_int(s.substr(0, dots)), to_int(s.substr(dots + 2))};
  if (r.lo > r.hi) throw error(errc::parse_error, "empty range '" + s + "'");
  return r;
}

inline std::string decimal_approx(const ExactRational& q, int digits = 12) {
  std::ostringstream os;
  os.precision(digits);
  using boost::multiprecision::cpp_dec_float_50;
  os << cpp_dec_float_50(boost::multiprecision::numerator(q)) / cpp_dec_float_50(boost::multiprecision::denominator(q));
  return os.str();
}

// ---------------------------------------------------------------------------
// expect

enum class Stat { descents, inversions };

struct ExpectResult {
  OutputRecord record;
  int exit_code = 0;
};

inline ExpectResult cmd_expect(std::int64_t n, std::int64_t k, Stat stat, ValidityRange range,
                               bool decimal = false) {
  ExpectResult res;
  auto& rec = res.record;
  rec.command = "expect";
  rec.params = {{"n", std::to_string(n)},
                {"k", std::to_string(k)},
                {"stat", stat == Stat::descents ? "descents" : "inversions"},
                {"range", range == ValidityRange::theorem ? "theorem" : "extended"}};
  try {
    if (stat == Stat::inversions && range == ValidityRange::extended) {
      throw error(errc::out_of_validity_range, "the extended range applies to descents only");
    }
    const ExactRational v = stat == Stat::descents ? expected_descents(n, k, range) : expected_inversions(n, k);
    rec.value = permstat::to_string(v);
    if (decimal) rec.params.emplace_back("decimal", decimal_approx(v));
  } catch (const error& e) {
    rec.value = e.what();
    rec.status = Status::out_of_range;
    res.exit_code = 2;
  }
  return res;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::string suite = "all";
  int n_max = 8;
  int k_max = 4;
  int workers = oracle::default_workers();
};

inline const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites = {"expectations", "pair-counts", "grassmannian", "max-descents"};
  return suites;
}

namespace detail {

struct Collector {
  std::vector<OutputRecord> records;

  void add(const std::string& suite, const std::string& check, std::int64_t n, std::int64_t k,
           const std::string& detail, const std::string& formula, const std::string& oracle_value) {
    add_status(suite, check, n, k, detail, formula, oracle_value,
               formula == oracle_value ? Status::ok : Status::violation);
  }

  void add_status(const std::string& suite, const std::string& check, std::int64_t n, std::int64_t k,
                  const std::string& detail, const std::string& formula, const std::string& oracle_value,
                  Status status) {
    OutputRecord rec;
    rec.command = "verify";
    rec.params = {{"suite", suite},   {"check", check},  {"n", std::to_string(n)}, {"k", std::to_string(k)},
                  {"case", detail}, {"oracle", oracle_value}};
    rec.value = formula;
    rec.status = status;
    records.push_back(std::move(rec));
  }
};

inline void verify_expectations(const VerifyOptions& opt, Collector& out) {
  for (int k = 1; k <= opt.k_max; ++k) {
    for (int n = 1; n <= opt.n_max; ++n) {
      const ExpectationQuery q{n, k};
      if (!q.theorem_range() && !q.extended_descent_range()) continue;
      const auto des = oracle::mean_statistic(n, static_cast<std::uint64_t>(k), oracle::Statistic::descents, opt.workers);
      if (q.theorem_range()) {
        out.add("expectations", "descents", n, k, "", permstat::to_string(expected_descents(n, k)),
                permstat::to_string(des.mean));
        const auto inv =
            oracle::mean_statistic(n, static_cast<std::uint64_t>(k), oracle::Statistic::inversions, opt.workers);
        out.add("expectations", "inversions", n, k, "", permstat::to_string(expected_inversions(n, k)),
                permstat::to_string(inv.mean));
      } else {
        out.add("expectations", "descents-extended", n, k, "",
                permstat::to_string(expected_descents(n, k, ValidityRange::extended)), permstat::to_string(des.mean));
      }
    }
  }
}

// Tally of (p^k(i), p^k(j)) over S_n; cell [x][y] counts p with p^k(i)=x, p^k(j)=y.
inline std::vector<std::vector<std::uint64_t>> pair_tally(int n, std::uint64_t k, int i, int j) {
  std::vector<std::vector<std::uint64_t>> tally(static_cast<std::size_t>(n) + 1,
                                                std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  std::vector<int> pk(static_cast<std::size_t>(n));
  oracle::for_each_permutation(n, [&](const Permutation& p) {
    words::power_into(p.word(), k, pk);
    ++tally[pk[i - 1]][pk[j - 1]];
  });
  return tally;
}

inline void verify_pair_counts(const VerifyOptions& opt, Collector& out) {
  for (int k = 1; k <= opt.k_max; ++k) {
    for (int n = std::max(4, 2 * k + 1); n <= opt.n_max; ++n) {
      for (const auto& [i, j] : {std::pair{1, 2}, std::pair{2, n}}) {
        const auto tally = pair_tally(n, static_cast<std::uint64_t>(k), i, j);
        // Every (x, y) of a class must agree; report the set of observed values.
        std::map<std::string, std::set<std::uint64_t>> seen;
        for (int x = 1; x <= n; ++x) {
          for (int y = 1; y <= n; ++y) {
            if (x == y) continue;
            const bool xi = x == i, xj = x == j, yi = y == i, yj = y == j;
            std::string cls;
            if (!xi && !xj && !yi && !yj) cls = "generic";
            else if (xi && yj) cls = "both-fixed";
            else if (xj && yi) cls = "swap";
            else if (xi || yj) cls = "i-to-i";
            else cls = "i-to-j";
            seen[cls].insert(tally[x][y]);
          }
        }
        const std::string where = "i=" + std::to_string(i) + " j=" + std::to_string(j);
        auto observed = [&](const std::string& cls) {
          const auto& s = seen[cls];
          if (s.size() != 1) return std::string("inconsistent");
          return std::to_string(*s.begin());
        };
        out.add("pair-counts", "generic", n, k, where, pair_count_generic(n, k).str(), observed("generic"));
        out.add("pair-counts", "i-to-i", n, k, where, pair_count_i_to_i(n, k).str(), observed("i-to-i"));
        out.add("pair-counts", "i-to-j", n, k, where, pair_count_i_to_j(n, k).str(), observed("i-to-j"));
        out.add("pair-counts", "both-fixed", n, k, where, pair_count_both_fixed(n, k).str(), observed("both-fixed"));
        out.add("pair-counts", "swap", n, k, where, pair_count_swap(n, k).str(), observed("swap"));
      }
    }
  }
  // The half split holds for every n and k.
  for (int k = 1; k <= opt.k_max; ++k) {
    for (int n = 2; n <= opt.n_max; ++n) {
      std::vector<std::uint64_t> des(static_cast<std::size_t>(n), 0), asc(static_cast<std::size_t>(n), 0);
      std::vector<int> pk(static_cast<std::size_t>(n));
      oracle::for_each_permutation(n, [&](const Permutation& p) {
        words::power_into(p.word(), static_cast<std::uint64_t>(k), pk);
        for (int i = 1; i < n; ++i) {
          const int a = pk[i - 1], b = pk[i];
          if ((a == i && b == i + 1) || (a == i + 1 && b == i)) continue;
          ++(a > b ? des[i] : asc[i]);
        }
      });
      for (int i = 1; i < n; ++i) {
        out.add("pair-counts", "half-split", n, k, "i=" + std::to_string(i), std::to_string(des[i]),
                std::to_string(asc[i]));
      }
    }
  }
}

inline bool is_n_cycle(const Permutation& p) { return cycle_decomposition(p).cycles.size() == 1; }

inline void verify_grassmannian(const VerifyOptions& opt, Collector& out) {
  // Cycle counts, total and per descent position.
  for (int n = 2; n <= opt.n_max; ++n) {
    std::vector<std::uint64_t> at(static_cast<std::size_t>(n), 0);
    std::uint64_t total = 0;
    oracle::for_each_permutation(n, [&](const Permutation& p) {
      if (descent_count(p) != 1 || !is_n_cycle(p)) return;
      ++total;
      for (int i = 1; i < n; ++i) {
        if (p(i) > p(i + 1)) ++at[i];
      }
    });
    out.add("grassmannian", "cycle-count", n, 0, "", grassmannian_cycle_count(n).str(), std::to_string(total));
    out.add("grassmannian", "cycle-enumeration", n, 0, "", std::to_string(enumerate_grassmannian_cycles(n).size()),
            std::to_string(total));
    for (int i = 1; i < n; ++i) {
      out.add("grassmannian", "descent-at", n, 0, "i=" + std::to_string(i), n_cycles_with_descent_at(n, i).str(),
              std::to_string(at[i]));
    }
  }

  // Merge: structure for every ordered pair, uniqueness for distinct pairs.
  std::map<int, std::vector<GrassCycle>> cycles;
  for (int len = 2; len + 2 <= opt.n_max; ++len) cycles[len] = enumerate_grassmannian_cycles(len);
  for (int total = 4; total <= opt.n_max; ++total) {
    // Grassmannian permutations of [total] with exactly two cycles, keyed by
    // the standardized cycles (as an unordered pair).
    std::map<std::pair<Permutation, Permutation>, std::vector<Permutation>> found;
    oracle::for_each_permutation(total, [&](const Permutation& p) {
      if (!is_grassmannian(p)) return;
      const auto cd = cycle_decomposition(p);
      if (cd.cycles.size() != 2 || cd.cycles[0].size() < 2 || cd.cycles[1].size() < 2) return;
      Permutation a = restrict_to(p, cd.cycles[0]);
      Permutation b = restrict_to(p, cd.cycles[1]);
      if (b < a) std::swap(a, b);
      found[{a, b}].push_back(p);
    });
    std::uint64_t pairs = 0, good = 0;
    for (int r = 2; r + 2 <= total; ++r) {
      const int s = total - r;
      for (const auto& alpha : cycles[r]) {
        for (const auto& beta : cycles[s]) {
          ++pairs;
          const auto res = merge_with_parts(alpha.perm(), beta.perm());
          bool ok = is_grassmannian(res.perm) && !has_fixed_point(res.perm) &&
                    restrict_to(res.perm, res.alpha_part) == alpha.perm() &&
                    restrict_to(res.perm, res.beta_part) == beta.perm();
          if (ok && !(alpha == beta)) {
            auto key = alpha.perm() < beta.perm() ? std::pair{alpha.perm(), beta.perm()}
                                                  : std::pair{beta.perm(), alpha.perm()};
            const auto it = found.find(key);
            ok = it != found.end() && it->second.size() == 1 && it->second.front() == res.perm;
          }
          good += ok;
        }
      }
    }
    out.add("grassmannian", "merge", total, 0, "ordered cycle pairs", std::to_string(pairs), std::to_string(good));
  }

  // Roots of the identity with moved endpoints.
  for (int k = 2; k <= std::max(2, opt.k_max); ++k) {
    for (int n = 1; n <= opt.n_max; ++n) {
      const auto brute = oracle::count_matching(
          n, [&](const Permutation& p) { return is_grassmannian_root_with_moved_ends(p, static_cast<std::uint64_t>(k)); },
          opt.workers);
      out.add("grassmannian", "eq11", n, k, "", count_eq11_solutions(n, k).str(), brute.str());
      out.add("grassmannian", "roots-enumeration", n, k, "", std::to_string(enumerate_kth_roots_grassmannian(n, k).size()),
              brute.str());
    }
  }

  // Dichotomy sweep: no permutation may escape both branches.
  for (int k = 3; k <= opt.k_max; ++k) {
    for (int n = 1; n <= opt.n_max; ++n) {
      std::uint64_t applicable = 0, violations = 0;
      oracle::for_each_permutation(n, [&](const Permutation& p) {
        try {
          const auto c = classify_power_grassmannian(p, k);
          if (!std::holds_alternative<NotApplicable>(c)) ++applicable;
        } catch (const error& e) {
          if (e.code() != errc::theorem_violation) throw;
          ++violations;
        }
      });
      out.add_status("grassmannian", "dichotomy", n, k, "violations=" + std::to_string(violations),
                     std::to_string(applicable), std::to_string(applicable),
                     violations == 0 ? Status::ok : Status::violation);
    }
  }
}

inline void verify_max_descents(const VerifyOptions& opt, Collector& out) {
  for (int k = 1; k <= opt.k_max; ++k) {
    const auto prof = max_descent_profile(k);
    for (int n = 1; n <= opt.n_max; ++n) {
      const Permutation target = decreasing(n);
      std::uint64_t hits = 0;
      bool structure_ok = true;
      const auto tuples = enumerate_Skn(n, k);
      oracle::for_each_permutation(n, [&](const Permutation& p) {
        if (power(p, static_cast<std::uint64_t>(k)) != target) return;
        ++hits;
        // Cycle type: 2d_i-cycles pairing j with n+1-j at distance d_i, plus
        // the middle fixed point for odd n.
        std::vector<std::int64_t> a(prof.r(), 0);
        for (const auto& c : cycle_decomposition(p).cycles) {
          const auto len = static_cast<std::int64_t>(c.size());
          if (len == 1) {
            structure_ok &= n % 2 == 1 && c[0] == (n + 1) / 2;
            continue;
          }
          const auto it = std::find(prof.d_list.begin(), prof.d_list.end(), len / 2);
          if (len % 2 != 0 || it == prof.d_list.end()) {
            structure_ok = false;
            continue;
          }
          ++a[static_cast<std::size_t>(it - prof.d_list.begin())];
          for (std::size_t t = 0; t < c.size(); ++t) {
            structure_ok &= c[(t + static_cast<std::size_t>(len / 2)) % c.size()] == n + 1 - c[t];
          }
        }
        structure_ok &= std::find(tuples.begin(), tuples.end(), SknTuple{a}) != tuples.end();
      });
      out.add("max-descents", "count", n, k, "", decreasing_power_count(n, k).str(), std::to_string(hits));
      out.add_status("max-descents", "cycle-structure", n, k, "", structure_ok ? "ok" : "bad", "ok",
                     structure_ok ? Status::ok : Status::violation);
      const bool feasible = decreasing_power_feasible(n, k);
      const bool consistent = feasible || (hits == 0 && tuples.empty());
      out.add_status("max-descents", "feasibility", n, k, feasible ? "feasible" : "infeasible",
                     feasible ? "true" : "false", std::to_string(hits),
                     consistent ? Status::ok : Status::violation);
    }
  }
}

}  // namespace detail

struct VerifyResult {
  std::vector<OutputRecord> records;
  int exit_code = 0;
  std::size_t mismatches = 0;
};

inline VerifyResult cmd_verify(const VerifyOptions& opt) {
  VerifyResult res;
  const auto& all = verify_suites();
  if (opt.suite != "all" && std::find(all.begin(), all.end(), opt.suite) == all.end()) {
    throw error(errc::invalid_query, "unknown suite '" + opt.suite + "'");
  }
  if (opt.n_max < 1 || opt.n_max > oracle::kMaxDegree) {
    throw error(errc::degree_too_large, "--n-max must be in [1, " + std::to_string(oracle::kMaxDegree) + "]");
  }
  if (opt.k_max < 1) throw error(errc::non_positive, "--k-max must be >= 1");
  detail::Collector out;
  auto wants = [&](const char* s) { return opt.suite == "all" || opt.suite == s; };
  if (wants("expectations")) detail::verify_expectations(opt, out);
  if (wants("pair-counts")) detail::verify_pair_counts(opt, out);
  if (wants("grassmannian")) detail::verify_grassmannian(opt, out);
  if (wants("max-descents")) detail::verify_max_descents(opt, out);
  res.records = std::move(out.records);
  for (const auto& r : res.records) res.mismatches += r.status != Status::ok;
  res.exit_code = res.mismatches == 0 ? 0 : 1;
  return res;
}

// ---------------------------------------------------------------------------
// table

inline const std::vector<std::string>& table_kinds() {
  static const std::vector<std::string> kinds = {"grassmannian-roots", "max-descents", "n-cycle-descents", "eq11"};
  return kinds;
}

/// Columns per kind (all followed by value,status):
///   eq11                n,k
///   grassmannian-roots  n,k,eq11     value = number enumerated by merging
///   max-descents        n,k,feasible
///   n-cycle-descents    n,i
inline std::vector<OutputRecord> cmd_table(const std::string& what, IntRange n_range, std::int64_t k) {
  std::vector<OutputRecord> out;
  auto record = [&](std::vector<std::pair<std::string, std::string>> params, std::string value,
                    Status st = Status::ok) {
    out.push_back(OutputRecord{"table:" + what, std::move(params), std::move(value), st});
  };
  if (what == "eq11") {
    for (auto n = n_range.lo; n <= n_range.hi; ++n) {
      record({{"n", std::to_string(n)}, {"k", std::to_string(k)}}, count_eq11_solutions(n, k).str());
    }
  } else if (what == "grassmannian-roots") {
    for (auto n = n_range.lo; n <= n_range.hi; ++n) {
      const auto expected = count_eq11_solutions(n, k).str();
      const auto count = std::to_string(enumerate_kth_roots_grassmannian(static_cast<int>(n), k).size());
      record({{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"eq11", expected}}, count,
             count == expected ? Status::ok : Status::violation);
    }
  } else if (what == "max-descents") {
    for (auto n = n_range.lo; n <= n_range.hi; ++n) {
      record({{"n", std::to_string(n)},
              {"k", std::to_string(k)},
              {"feasible", decreasing_power_feasible(n, k) ? "true" : "false"}},
             decreasing_power_count(n, k).str());
    }
  } else if (what == "n-cycle-descents") {
    for (auto n = n_range.lo; n <= n_range.hi; ++n) {
      for (std::int64_t i = 1; i < n; ++i) {
        record({{"n", std::to_string(n)}, {"i", std::to_string(i)}}, n_cycles_with_descent_at(n, i).str());
      }
    }
  } else {
    throw error(errc::invalid_query, "unknown table '" + what + "'");
  }
  return out;
}

}  // namespace permstat::cli
