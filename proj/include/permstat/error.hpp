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

#include <stdexcept>
#include <string>
#include <string_view>

namespace permstat {

enum class errc {
  empty,
  duplicate_value,
  out_of_range,
  shift_out_of_range,
  size_mismatch,
  parse_error,
  non_positive,
  out_of_validity_range,
  index_out_of_range,
  degree_too_small,
  degree_too_large,
  not_grassmannian,
  has_fixed_point,
  invalid_query,
  theorem_violation,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::empty: return "Empty";
    case errc::duplicate_value: return "DuplicateValue";
    case errc::out_of_range: return "OutOfRange";
    case errc::shift_out_of_range: return "ShiftOutOfRange";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::parse_error: return "ParseError";
    case errc::non_positive: return "NonPositive";
    case errc::out_of_validity_range: return "OutOfValidityRange";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::degree_too_small: return "DegreeTooSmall";
    case errc::degree_too_large: return "DegreeTooLarge";
    case errc::not_grassmannian: return "NotGrassmannian";
    case errc::has_fixed_point: return "HasFixedPoint";
    case errc::invalid_query: return "InvalidQuery";
    case errc::theorem_violation: return "TheoremViolation";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace permstat
