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

// Walks through the main entry points of the library.

#include <iostream>

#include "permstat/permstat.hpp"

int main() {
  using namespace permstat;

  const auto p = Permutation::from_word({2, 4, 1, 3});
  std::cout << "p = " << to_string(p) << " = " << to_cycle_string(p) << "\n";
  std::cout << "p^2 = " << to_string(power(p, 2)) << ", des = " << descent_count(power(p, 2)) << "\n";

  for (int k = 1; k <= 4; ++k) {
    std::cout << "E[des(p^" << k << ")] on S_9 = " << to_string(expected_descents(9, k))
              << ", by enumeration " << to_string(oracle::mean_statistic(9, k, oracle::Statistic::descents).mean)
              << "\n";
  }

  const auto merged = merge_cycles(Permutation::from_word({2, 3, 1}), Permutation::from_word({2, 5, 1, 3, 4}));
  std::cout << "merge(231, 25134) = " << to_string(merged) << "\n";

  std::cout << "Grassmannian cube roots of id with moved ends in S_6:";
  for (const auto& r : enumerate_kth_roots_grassmannian(6, 3)) std::cout << " " << to_string(r);
  std::cout << "\n";

  std::cout << "square roots of 87654321: " << decreasing_power_count(8, 2) << "\n";
  return 0;
}
