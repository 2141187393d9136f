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

// permstat: exact descent/inversion statistics of permutation powers.
//
//   permstat expect --n 5 --k 2 --stat descents
//   permstat verify --suite all --n-max 8 --k-max 4
//   permstat table --what eq11 --k 3 --n 0..12 --format csv
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or range error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using permstat::cli::Format;

int run(int argc, char** argv) {
  CLI::App app{"Exact descent and inversion statistics of permutation powers"};
  app.require_subcommand(1);

  // expect
  auto* expect = app.add_subcommand("expect", "Closed-form expected descents or inversions of p^k over S_n");
  std::int64_t n = 0, k = 0;
  std::string stat = "descents", range = "theorem", expect_format = "text";
  bool decimal = false;
  expect->add_option("--n", n, "Degree n")->required();
  expect->add_option("--k", k, "Power k")->required();
  expect->add_option("--stat", stat, "descents | inversions")
      ->check(CLI::IsMember({"descents", "inversions"}));
  expect->add_option("--range", range, "theorem (n >= 2k+1) | extended (descents only, n >= k + l(k))")
      ->check(CLI::IsMember({"theorem", "extended"}));
  expect->add_option("--format", expect_format, "text | csv | json");
  expect->add_flag("--decimal", decimal, "Also print an approximate decimal");

  // verify
  auto* verify = app.add_subcommand("verify", "Check every closed form against brute-force enumeration");
  permstat::cli::VerifyOptions vopt;
  std::string verify_format = "text";
  bool quiet = false;
  verify->add_option("--suite", vopt.suite, "expectations | pair-counts | grassmannian | max-descents | all")
      ->check(CLI::IsMember({"expectations", "pair-counts", "grassmannian", "max-descents", "all"}));
  verify->add_option("--n-max", vopt.n_max, "Largest degree enumerated (<= 10)")->capture_default_str();
  verify->add_option("--k-max", vopt.k_max, "Largest power")->capture_default_str();
  verify->add_option("--format", verify_format, "text | csv | json");
  verify->add_flag("--quiet", quiet, "Only print the summary line");

  // table
  auto* table = app.add_subcommand("table", "Emit a table of exact counts");
  table->footer(
      "Columns (each followed by value,status):\n"
      "  eq11                n,k           solutions of the cycle-count equation\n"
      "  grassmannian-roots  n,k,eq11      Grassmannian k-th roots of id with moved ends, by construction\n"
      "  max-descents        n,k,feasible  permutations whose k-th power is decreasing\n"
      "  n-cycle-descents    n,i           n-cycles whose only descent is at i");
  std::string what, n_spec, table_format = "csv";
  std::int64_t table_k = 2;
  table->add_option("--what", what, "grassmannian-roots | max-descents | n-cycle-descents | eq11")
      ->required()
      ->check(CLI::IsMember({"grassmannian-roots", "max-descents", "n-cycle-descents", "eq11"}));
  table->add_option("--n", n_spec, "Degree or inclusive range a..b")->required();
  table->add_option("--k", table_k, "Power k")->capture_default_str();
  table->add_option("--format", table_format, "csv | json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*expect) {
      const auto fmt = permstat::cli::parse_format(expect_format);
      if (!fmt) {
        std::cerr << "unknown format '" << expect_format << "'\n";
        return 2;
      }
      const auto res = permstat::cli::cmd_expect(
          n, k, stat == "descents" ? permstat::cli::Stat::descents : permstat::cli::Stat::inversions,
          range == "theorem" ? permstat::ValidityRange::theorem : permstat::ValidityRange::extended, decimal);
      if (*fmt == Format::text) {
        if (res.exit_code != 0) {
          std::cerr << res.record.value << "\n";
        } else {
          std::cout << res.record.value;
          if (decimal) std::cout << " ~ " << res.record.params.back().second;
          std::cout << "\n";
        }
      } else {
        std::cout << permstat::cli::render({res.record}, *fmt);
      }
      return res.exit_code;
    }
    if (*verify) {
      const auto fmt = permstat::cli::parse_format(verify_format);
      if (!fmt) {
        std::cerr << "unknown format '" << verify_format << "'\n";
        return 2;
      }
      const auto res = permstat::cli::cmd_verify(vopt);
      if (!quiet) std::cout << permstat::cli::render(res.records, *fmt);
      std::cerr << "verify: " << res.records.size() << " checks, " << res.mismatches << " mismatches\n";
      return res.exit_code;
    }
    if (*table) {
      const auto fmt = permstat::cli::parse_format(table_format);
      if (!fmt || *fmt == Format::text) {
        std::cerr << "unknown format '" << table_format << "' (expected csv or json)\n";
        return 2;
      }
      const auto records = permstat::cli::cmd_table(what, permstat::cli::parse_range(n_spec), table_k);
      std::cout << permstat::cli::render(records, *fmt);
      for (const auto& r : records) {
        if (r.status == permstat::cli::Status::violation) return 1;
      }
      return 0;
    }
  } catch (const permstat::error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == permstat::errc::theorem_violation ? 1 : 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
