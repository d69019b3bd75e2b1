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

#include "finstudio/numeric.hpp"
#include "finstudio/rules.hpp"

namespace finstudio {

/// Withholding already paid through utility and other channels.
struct AlreadyPaidTaxes {
  double electricity = 0.0;
  double telephone = 0.0;
  double mobile = 0.0;
  double others = 0.0;

  friend bool operator==(const AlreadyPaidTaxes&, const AlreadyPaidTaxes&) = default;
};

/// Form metadata. Stored and echoed back; never used in a formula.
struct TaxpayerDetails {
  std::string name;
  std::string cnic;  ///< 13 decimal digits when present
  std::string ntn;
  std::string designation;
  std::string posting_city;
  std::string employer_ntn;
  std::string tax_year;
  std::optional<Date> assessment_date;

  friend bool operator==(const TaxpayerDetails&, const TaxpayerDetails&) = default;
};

struct TaxProfile {
  TaxpayerDetails details;
  double monthly_income = 0.0;
  bool is_teacher = false;
  std::optional<AlreadyPaidTaxes> already_paid;

  friend bool operator==(const TaxProfile&, const TaxProfile&) = default;
};

struct TaxAssessment {
  std::string ruleset_id;
  TaxpayerDetails details;
  double annual_salary = 0.0;
  double take_home_monthly = 0.0;
  double gross_annual_tax = 0.0;
  double teacher_exemption = 0.0;
  double net_tax_after_exemption = 0.0;
  double total_already_paid = 0.0;
  double annual_tax_payable = 0.0;
  bool overpaid = false;

  friend bool operator==(const TaxAssessment&, const TaxAssessment&) = default;
};

/// Tax owed on an annual income under the slab schedule: base tax of the
/// highest slab starting at or below the income plus its marginal rate on
/// the excess.
double slab_tax(double annual_income, const TaxRules& rules);

/// Full assessment. The teacher exemption is taken off the slab tax first,
/// then already-paid credits; the payable amount is not clamped, and
/// `overpaid` flags a negative result.
///
/// Throws InvalidInput for a negative or non-finite income or credit, or a
/// CNIC that is not 13 digits.
TaxAssessment assess_tax(const TaxProfile& profile, const RuleSet& ruleset);

}  // namespace finstudio
