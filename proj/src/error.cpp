// Copyright 2026 The Financial Studio Authors
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

#include "finstudio/error.hpp"

#include <array>

namespace finstudio {

namespace {

constexpr std::array kAllCodes{
    ErrorCode::parse_error,       ErrorCode::validation_error,
    ErrorCode::invalid_input,     ErrorCode::service_too_short,
    ErrorCode::no_categories,     ErrorCode::not_a_number,
    ErrorCode::empty_input,       ErrorCode::schema_violation,
    ErrorCode::unknown_ruleset,   ErrorCode::not_found,
    ErrorCode::internal_error,
};

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::validation_error: return "validation_error";
    case ErrorCode::invalid_input: return "invalid_input";
    case ErrorCode::service_too_short: return "service_too_short";
    case ErrorCode::no_categories: return "no_categories";
    case ErrorCode::not_a_number: return "not_a_number";
    case ErrorCode::empty_input: return "empty_input";
    case ErrorCode::schema_violation: return "schema_violation";
    case ErrorCode::unknown_ruleset: return "unknown_ruleset";
    case ErrorCode::not_found: return "not_found";
    case ErrorCode::internal_error: return "internal_error";
  }
  return "unknown";
}

std::span<const ErrorCode> all_error_codes() { return kAllCodes; }

}  // namespace finstudio
