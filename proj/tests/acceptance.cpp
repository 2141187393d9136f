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

// Acceptance runner. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. argv[1] is the permstat CLI binary (criterion 11).

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <stdlib.h>  // setenv

#include "permstat/permstat.hpp"

namespace {

using namespace permstat;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failure; later checks still run so the detail is useful.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && out_.pass) {
      out_.pass = false;
      out_.detail = what;
    }
  }
  Outcome done(const std::string& summary) {
    if (out_.pass) out_.detail = summary + " (" + std::to_string(checks_) + " checks)";
    return out_;
  }

 private:
  Outcome out_;
  std::size_t checks_ = 0;
};

std::string cell(std::int64_t n, std::int64_t k) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

Outcome ac1() {
  Check c;
  for (std::int64_t k = 1; k <= 4; ++k) {
    for (std::int64_t n = 2 * k + 1; n <= 9; ++n) {
      const auto got = expected_descents(n, k);
      const auto want = oracle::mean_statistic(static_cast<int>(n), k, oracle::Statistic::descents).mean;
      c.expect(got == want, cell(n, k) + ": formula " + to_string(got) + " oracle " + to_string(want));
    }
  }
  return c.done("E[des(p^k)] = oracle mean for k <= 4, 2k+1 <= n <= 9");
}

Outcome ac2() {
  Check c;
  for (std::int64_t k = 1; k <= 4; ++k) {
    for (std::int64_t n = 2 * k + 1; n <= 9; ++n) {
      const auto got = expected_inversions(n, k);
      const auto want = oracle::mean_statistic(static_cast<int>(n), k, oracle::Statistic::inversions).mean;
      c.expect(got == want, cell(n, k) + ": formula " + to_string(got) + " oracle " + to_string(want));
    }
  }
  c.expect(expected_inversions(5, 2) == ExactRational(23, 6), "fixture n=5 k=2 is not 23/6");
  for (std::int64_t n = 7; n <= 9; ++n) {
    const ExactRational shape = ExactRational(n - 1, 2) - ExactRational(2, n);
    for (std::int64_t k : {2, 3}) {
      const auto mean = oracle::mean_statistic(static_cast<int>(n), k, oracle::Statistic::descents).mean;
      c.expect(mean == shape, cell(n, k) + ": descent mean " + to_string(mean) + " is not (n-1)/2 - 2/n");
    }
  }
  return c.done("E[inv(p^k)] = oracle mean on the same grid, 23/6 fixture, k=2,3 descent shape");
}

Outcome ac3() {
  Check c;
  std::size_t cells = 0;
  for (std::int64_t k : {4, 6}) {
    const std::int64_t lo = k + *divisor_profile(k).largest_proper;
    for (std::int64_t n = lo; n < 2 * k + 1 && n <= 9; ++n) {
      const auto got = expected_descents(n, k, ValidityRange::extended);
      const auto want = oracle::mean_statistic(static_cast<int>(n), k, oracle::Statistic::descents).mean;
      c.expect(got == want, cell(n, k) + ": formula " + to_string(got) + " oracle " + to_string(want));
      ++cells;
    }
  }
  c.expect(cells == 4, "expected cells (6,4) (7,4) (8,4) (9,6)");
  c.expect(expected_descents(6, 4, ValidityRange::extended) == ExactRational(3, 2), "(6,4) is not 3/2");
  return c.done("extended-range descent means at (6,4) (7,4) (8,4) (9,6)");
}

enum class PairClass { generic, i_to_i, i_to_j, both_fixed, swap };

PairClass classify_pair(int i, int j, int x, int y) {
  if (x == i && y == j) return PairClass::both_fixed;
  if (x == j && y == i) return PairClass::swap;
  if (x == i || x == j || y == i || y == j) {
    // One image lands in {i, j}. Up to the symmetry that swaps the roles of
    // i and j, either a point goes to itself or to the other one.
    return (x == i || y == j) ? PairClass::i_to_i : PairClass::i_to_j;
  }
  return PairClass::generic;
}

BigNat closed_form(PairClass cls, std::int64_t n, std::int64_t k) {
  switch (cls) {
    case PairClass::generic: return pair_count_generic(n, k);
    case PairClass::i_to_i: return pair_count_i_to_i(n, k);
    case PairClass::i_to_j: return pair_count_i_to_j(n, k);
    case PairClass::both_fixed: return pair_count_both_fixed(n, k);
    case PairClass::swap: return pair_count_swap(n, k);
  }
  return 0;
}

Outcome ac4() {
  Check c;
  const std::array<const char*, 5> names{"generic", "i->i", "i->j", "both-fixed", "swap"};
  std::size_t brute_queries = 0, vacuous = 0;
  for (std::int64_t k = 1; k <= 3; ++k) {
    for (std::int64_t n : {2 * k + 1, 2 * k + 3}) {
      if (n > 9) continue;
      const int nn = static_cast<int>(n);
      std::map<std::array<int, 4>, std::uint64_t> tally;
      oracle::for_each_permutation(nn, [&](const Permutation& p) {
        const auto q = power(p, static_cast<std::uint64_t>(k));
        for (int i = 1; i <= nn; ++i) {
          for (int j = 1; j <= nn; ++j) {
            if (i != j) ++tally[{i, j, q(i), q(j)}];
          }
        }
      });
      std::array<std::vector<std::array<int, 4>>, 5> by_class;
      for (int i = 1; i <= nn; ++i) {
        for (int j = 1; j <= nn; ++j) {
          for (int x = 1; x <= nn; ++x) {
            for (int y = 1; y <= nn; ++y) {
              if (i == j || x == y) continue;
              const auto cls = classify_pair(i, j, x, y);
              by_class[static_cast<std::size_t>(cls)].push_back({i, j, x, y});
              // Independence: every tuple of a class gets the class count.
              const auto it = tally.find({i, j, x, y});
              const BigNat seen = it == tally.end() ? 0 : it->second;
              c.expect(seen == closed_form(cls, n, k),
                       cell(n, k) + " " + names[static_cast<std::size_t>(cls)] + " tuple (" +
                           std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(x) + "," +
                           std::to_string(y) + "): " + seen.str());
            }
          }
        }
      }
      for (std::size_t cls = 0; cls < 5; ++cls) {
        const auto& list = by_class[cls];
        if (list.empty()) {
          // n = 3 leaves a single value outside {i, j}, so no generic tuple exists.
          ++vacuous;
          continue;
        }
        c.expect(list.size() >= 3, cell(n, k) + " " + names[cls] + " has fewer than 3 tuples");
        for (std::size_t pick : {std::size_t{0}, list.size() / 2, list.size() - 1}) {
          const auto& [i, j, x, y] = list[pick];
          const auto brute = oracle::brute_pair_count(nn, static_cast<std::uint64_t>(k), i, j, x, y);
          c.expect(brute == closed_form(static_cast<PairClass>(cls), n, k),
                   cell(n, k) + " " + names[cls] + " brute " + brute.str());
          ++brute_queries;
        }
      }
    }
  }
  return c.done("five pair counts vs brute force, " + std::to_string(brute_queries) +
                " direct queries, full independence sweep, " + std::to_string(vacuous) +
                " empty class at n=3");
}

Outcome ac5() {
  Check c;
  for (int n = 2; n <= 7; ++n) {
    for (std::uint64_t k = 1; k <= 5; ++k) {
      std::vector<std::uint64_t> des(static_cast<std::size_t>(n)), asc(static_cast<std::size_t>(n));
      oracle::for_each_permutation(n, [&](const Permutation& p) {
        const auto q = power(p, k);
        for (int i = 1; i < n; ++i) {
          const int a = q(i), b = q(i + 1);
          if ((a == i || a == i + 1) && (b == i || b == i + 1)) continue;
          ++(a > b ? des[i] : asc[i]);
        }
      });
      for (int i = 1; i < n; ++i) {
        c.expect(des[i] == asc[i], cell(n, static_cast<std::int64_t>(k)) + " i=" + std::to_string(i) + ": " +
                                       std::to_string(des[i]) + " vs " + std::to_string(asc[i]));
      }
    }
  }
  return c.done("exact descent/ascent split at every position, n <= 7, k <= 5");
}

bool is_n_cycle(const Permutation& p) { return cycle_decomposition(p).cycles.size() == 1; }

Outcome ac6() {
  Check c;
  for (int n = 2; n <= 8; ++n) {
    const auto brute =
        oracle::count_matching(n, [](const Permutation& p) { return descent_count(p) == 1 && is_n_cycle(p); });
    c.expect(grassmannian_cycle_count(n) == brute, "n=" + std::to_string(n) + ": oracle " + brute.str());
  }
  for (std::int64_t n = 2; n <= 16; ++n) {
    BigNat sum = 0;
    for (std::int64_t i = 1; i < n; ++i) sum += n_cycles_with_descent_at(n, i);
    c.expect(sum == grassmannian_cycle_count(n), "position sum differs at n=" + std::to_string(n));
  }
  c.expect(grassmannian_cycle_count(2) == 1, "N_2 != 1");
  c.expect(grassmannian_cycle_count(3) == 2, "N_3 != 2");
  c.expect(grassmannian_cycle_count(5) == 6 && BigNat(6) == (pow2(5) - 2) / 5, "N_5 != 6");
  return c.done("cycle counts vs oracle for n <= 8, position sums for n <= 16, N_2 N_3 N_5");
}

Outcome ac7() {
  Check c;
  const auto P = [](std::initializer_list<int> w) { return Permutation::from_word(w); };
  c.expect(merge_cycles(P({2, 3, 1}), P({2, 5, 1, 3, 4})) == P({3, 4, 5, 8, 1, 2, 6, 7}),
           "merge(231, 25134) != 34581267");
  std::map<int, std::vector<GrassCycle>> cycles;
  for (int len = 2; len <= 7; ++len) cycles[len] = enumerate_grassmannian_cycles(len);
  std::size_t pairs = 0;
  for (int total = 4; total <= 9; ++total) {
    std::map<std::pair<Permutation, Permutation>, std::vector<Permutation>> by_parts;
    oracle::for_each_permutation(total, [&](const Permutation& p) {
      if (!is_grassmannian(p)) return;
      const auto cd = cycle_decomposition(p);
      if (cd.cycles.size() != 2 || cd.cycles[0].size() < 2 || cd.cycles[1].size() < 2) return;
      auto a = restrict_to(p, cd.cycles[0]), b = restrict_to(p, cd.cycles[1]);
      if (b < a) std::swap(a, b);
      by_parts[{a, b}].push_back(p);
    });
    for (int r = 2; r + 2 <= total; ++r) {
      for (const auto& alpha : cycles[r]) {
        for (const auto& beta : cycles[total - r]) {
          ++pairs;
          const auto res = merge_with_parts(alpha.perm(), beta.perm());
          const std::string tag = to_string(alpha.perm()) + " + " + to_string(beta.perm());
          c.expect(is_grassmannian(res.perm) && !has_fixed_point(res.perm), tag + ": not Grassmannian/derangement");
          c.expect(restrict_to(res.perm, res.alpha_part) == alpha.perm() &&
                       restrict_to(res.perm, res.beta_part) == beta.perm(),
                   tag + ": parts do not standardize back");
          if (alpha == beta) continue;
          const auto key = alpha.perm() < beta.perm() ? std::pair{alpha.perm(), beta.perm()}
                                                      : std::pair{beta.perm(), alpha.perm()};
          c.expect(by_parts[key] == std::vector<Permutation>{res.perm}, tag + ": not the unique such permutation");
        }
      }
    }
  }
  return c.done("merge fixture and " + std::to_string(pairs) + " ordered pairs with r+s <= 9");
}

Outcome ac8() {
  Check c;
  for (std::int64_t k = 2; k <= 6; ++k) {
    for (int n = 1; n <= 9; ++n) {
      const auto brute = oracle::count_matching(
          n, [&](const Permutation& p) { return is_grassmannian_root_with_moved_ends(p, static_cast<std::uint64_t>(k)); });
      c.expect(count_eq11_solutions(n, k) == brute, cell(n, k) + ": oracle " + brute.str());
    }
  }
  for (std::int64_t p : {2, 3, 5}) {
    const auto np = grassmannian_cycle_count(p).convert_to<std::int64_t>();
    for (std::int64_t n = 1; n <= 9; ++n) {
      const BigNat want = n % p == 0 ? binomial(n / p + np - 1, np - 1) : BigNat(0);
      c.expect(count_eq11_solutions(n, p) == want, cell(n, p) + ": prime closed form");
    }
  }
  c.expect(count_eq11_solutions(4, 4) == 4, "fixture n=4 k=4 is not 4");
  return c.done("composition-equation solution counts vs oracle for k = 2..6, n <= 9, prime cases, (4,4) -> 4");
}

Outcome ac9() {
  Check c;
  std::map<std::string, std::uint64_t> kinds;
  for (std::int64_t k = 3; k <= 5; ++k) {
    for (int n = 1; n <= 9; ++n) {
      std::uint64_t violations = 0;
      oracle::for_each_permutation(n, [&](const Permutation& p) {
        try {
          const auto r = classify_power_grassmannian(p, k);
          if (std::holds_alternative<CyclicShift>(r)) ++kinds["shift"];
          if (std::holds_alternative<RootOfIdentity>(r)) ++kinds["root"];
        } catch (const error& e) {
          if (e.code() != errc::theorem_violation) throw;
          ++violations;
        }
      });
      c.expect(violations == 0, cell(n, k) + ": " + std::to_string(violations) + " violations");
    }
  }
  return c.done("no violations over S_n, n <= 9, k = 3..5 (" + std::to_string(kinds["shift"]) + " shifts, " +
                std::to_string(kinds["root"]) + " roots)");
}

Outcome ac10() {
  Check c;
  for (std::int64_t k = 1; k <= 6; ++k) {
    const auto prof = max_descent_profile(k);
    for (int n = 1; n <= 9; ++n) {
      const auto target = decreasing(n);
      const auto roots = oracle::find_all(n, [&](const Permutation& p) { return power(p, k) == target; });
      c.expect(decreasing_power_count(n, k) == roots.size(), cell(n, k) + ": oracle " + std::to_string(roots.size()));
      const auto list = enumerate_Skn(n, k);
      for (const auto& p : roots) {
        std::map<std::int64_t, std::int64_t> halves;
        bool shape = true;
        for (const auto& cyc : cycle_decomposition(p).cycles) {
          if (cyc.size() == 1) {
            shape &= 2 * cyc[0] == n + 1;
            continue;
          }
          shape &= cyc.size() % 2 == 0;
          for (int j : cyc) shape &= std::find(cyc.begin(), cyc.end(), n + 1 - j) != cyc.end();
          ++halves[static_cast<std::int64_t>(cyc.size() / 2)];
        }
        std::vector<std::int64_t> a;
        std::int64_t listed = 0, seen = 0;
        for (std::int64_t d : prof.d_list) {
          a.push_back(halves[d]);
          listed += halves[d];
        }
        for (const auto& [d, m] : halves) seen += m;
        shape &= listed == seen && std::find(list.begin(), list.end(), SknTuple{a}) != list.end();
        c.expect(shape, cell(n, k) + ": root " + to_cycle_string(p) + " has unexpected cycle type");
      }
    }
  }
  for (std::int64_t k = 1; k <= 8; ++k) {
    for (std::int64_t n = 1; n <= 20; ++n) {
      if (!decreasing_power_feasible(n, k)) {
        c.expect(decreasing_power_count(n, k) == 0, cell(n, k) + ": infeasible but count nonzero");
      }
    }
  }
  c.expect(decreasing_power_count(4, 2) == 2, "fixture n=4 k=2 is not 2");
  return c.done("decreasing-power roots vs oracle for k <= 6, n <= 9, cycle types, feasibility for n <= 20");
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  double seconds = 0;
};

RunResult run(const std::string& command) {
  RunResult r;
  const auto start = std::chrono::steady_clock::now();
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome ac11(const std::string& cli) {
  Check c;
  const std::string quoted = "'" + cli + "'";
  const std::string verify = quoted + " verify --suite all --n-max 8 --k-max 4";
  setenv("PERMSTAT_WORKERS", "1", 1);
  const auto base = run(verify + " --quiet 2>/dev/null");
  c.expect(base.exit_code == 0, "verify exited " + std::to_string(base.exit_code));
  c.expect(base.seconds <= 300, "verify took " + std::to_string(base.seconds) + " s");
  double slowest = base.seconds;

  const std::vector<std::string> outputs{
      verify + " --format csv",
      verify + " --format json",
      quoted + " table --what eq11 --n 0..30 --k 6 --format csv",
      quoted + " table --what grassmannian-roots --n 1..12 --k 4 --format json",
      quoted + " table --what max-descents --n 1..20 --k 4 --format csv",
      quoted + " table --what n-cycle-descents --n 2..10 --format json",
  };
  for (const auto& cmd : outputs) {
    std::string reference;
    bool first = true;
    for (const char* workers : {"1", "1", "2", "4", "7"}) {
      setenv("PERMSTAT_WORKERS", workers, 1);
      const auto r = run(cmd + " 2>/dev/null");
      slowest = std::max(slowest, r.seconds);
      c.expect(r.exit_code == 0, cmd + " exited " + std::to_string(r.exit_code));
      c.expect(!r.out.empty(), cmd + " produced no output");
      if (first) {
        reference = r.out;
        first = false;
      }
      c.expect(r.out == reference, cmd + " differs with PERMSTAT_WORKERS=" + workers);
    }
  }
  unsetenv("PERMSTAT_WORKERS");
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << "verify exits 0 in " << base.seconds << " s, CSV/JSON byte-stable over runs and worker counts"
     << " (slowest run " << slowest << " s)";
  return c.done(os.str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-permstat>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 descent expectation exactness", ac1},
      {"AC2 inversion expectation exactness", ac2},
      {"AC3 extended descent range", ac3},
      {"AC4 pair-count lemmas", ac4},
      {"AC5 half-split", ac5},
      {"AC6 Grassmannian cycle counts", ac6},
      {"AC7 merge correctness and uniqueness", ac7},
      {"AC8 Grassmannian roots of the identity", ac8},
      {"AC9 power classification sweep", ac9},
      {"AC10 roots of the decreasing permutation", ac10},
      {"AC11 CLI contract", [&] { return ac11(cli); }},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << " [" << secs << " s]";
    std::cout << line.str() << std::endl;
    failed += o.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all 11 criteria passed" : std::to_string(failed) + " of 11 criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
