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

#include <optional>
#include <string>
#include <vector>

#include "finstudio/numeric.hpp"
#include "finstudio/rules.hpp"

namespace finstudio {

/// Retiree particulars that are echoed on the award but never enter a formula.
struct PensionerDetails {
  std::string pensioner_name;
  std::optional<Date> date_of_birth;
  std::optional<Date> date_of_appointment;
  std::optional<Date> date_of_retirement;
  std::optional<int> bps;  ///< basic pay scale grade

  friend bool operator==(const PensionerDetails&, const PensionerDetails&) = default;
};

struct PensionInput {
  PensionerDetails details;
  double last_basic_pay = 0.0;
  double qualifying_service = 0.0;  ///< years

  friend bool operator==(const PensionInput&, const PensionInput&) = default;
};

struct PensionIncrease {
  std::string label;
  double amount = 0.0;  ///< per month

  friend bool operator==(const PensionIncrease&, const PensionIncrease&) = default;
};

/// Monthly figures unless noted.
struct PensionAward {
  std::string ruleset_id;
  PensionerDetails details;
  double creditable_service = 0.0;  ///< years, capped
  double gross_pension = 0.0;
  double commuted_portion = 0.0;
  double net_pension = 0.0;
  double total_gratuity = 0.0;  ///< lump sum
  std::vector<PensionIncrease> increases;
  double medical_allowance = 0.0;
  double total_pension_per_month = 0.0;
  /// Non-fatal remarks, e.g. retirement age differing from superannuation.
  std::vector<std::string> advisories;

  friend bool operator==(const PensionAward&, const PensionAward&) = default;
};

inline constexpr std::string_view kServiceTooShortTitle = "Incorrect value";

/// Computes the award:
///
///   creditable = min(qualifying_service, max_creditable_service)
///   gross      = last_basic_pay * 7 * creditable / 300
///   commuted   = gross * 35 / 300
///   net        = gross - commuted
///   gratuity   = commuted * 148.4628
///   increase_i = net * fraction_i, medical = net * 0.25
///   total      = net + sum(increase_i) + medical
///
/// with every constant taken from `ruleset.pension`.
///
/// Throws ServiceTooShort ("Please Enter >= 10 Years qualifying Service")
/// below the minimum service, InvalidInput for negative pay or out-of-order
/// dates.
PensionAward compute_pension(const PensionInput& input, const RuleSet& ruleset);

}  // namespace finstudio
