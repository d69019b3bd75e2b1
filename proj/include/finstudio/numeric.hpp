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

#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace finstudio {

/// Rounds to 2 decimal places, half away from zero, on the value's shortest
/// round-trip decimal rendering. 151555.775 becomes 151555.78 even though
/// the nearest double lies a hair below the tie.
std::string format_amount(double value);

/// Numeric counterpart of format_amount().
double round_amount(double value);

/// Strict decimal number check used for form-style text inputs. Accepts
/// optional surrounding ASCII whitespace, a leading sign, a fraction and an
/// exponent. Rejects empty text, trailing garbage, inf and nan.
std::optional<double> parse_number(std::string_view text);

using Date = std::chrono::year_month_day;

/// Parses an ISO calendar date "YYYY-MM-DD"; nullopt when malformed or the
/// day does not exist.
std::optional<Date> parse_date(std::string_view text);

std::string format_date(const Date& date);

}  // namespace finstudio
