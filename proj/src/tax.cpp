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

#include "finstudio/tax.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "finstudio/error.hpp"

namespace finstudio {

namespace {

void require_amount(double value, const char* field) {
  if (!std::isfinite(value) || value < 0.0) {
    throw InvalidInput(std::string(field) + " must be a non-negative amount", field);
  }
}

bool is_valid_cnic(const std::string& cnic) {
  return cnic.size() == 13 &&
         std::all_of(cnic.begin(), cnic.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

double slab_tax(double annual_income, const TaxRules& rules) {
  const auto& brackets = rules.brackets;
  if (brackets.empty() || annual_income <= 0.0) return 0.0;
  auto above = std::upper_bound(
      brackets.begin(), brackets.end(), annual_income,
      [](double income, const TaxBracket& b) { return income < b.lower_bound; });
  const TaxBracket& slab = *std::prev(above);
  return std::max(0.0, slab.base_tax + slab.marginal_rate * (annual_income - slab.lower_bound));
}

TaxAssessment assess_tax(const TaxProfile& profile, const RuleSet& ruleset) {
  require_amount(profile.monthly_income, "monthly_income");
  if (!profile.details.cnic.empty() && !is_valid_cnic(profile.details.cnic)) {
    throw InvalidInput("CNIC must be exactly 13 digits", "cnic");
  }
  if (profile.already_paid) {
    require_amount(profile.already_paid->electricity, "already_paid.electricity");
    require_amount(profile.already_paid->telephone, "already_paid.telephone");
    require_amount(profile.already_paid->mobile, "already_paid.mobile");
    require_amount(profile.already_paid->others, "already_paid.others");
  }

  const TaxRules& rules = ruleset.tax;
  TaxAssessment a;
  a.ruleset_id = ruleset.id;
  a.details = profile.details;
  a.annual_salary = profile.monthly_income * rules.months_per_year;
  a.take_home_monthly = profile.monthly_income;
  a.gross_annual_tax = slab_tax(a.annual_salary, rules);
  a.teacher_exemption = profile.is_teacher ? a.gross_annual_tax * rules.teacher_rebate_fraction : 0.0;
  a.net_tax_after_exemption = a.gross_annual_tax - a.teacher_exemption;

  if (profile.already_paid) {
    const auto& paid = *profile.already_paid;
    // Summed smallest first so the total is independent of which channel
    // carried which amount.
    std::array parts{paid.electricity, paid.telephone, paid.mobile, paid.others};
    std::sort(parts.begin(), parts.end());
    for (double part : parts) a.total_already_paid += part;
  }
  a.annual_tax_payable = a.net_tax_after_exemption - a.total_already_paid;
  a.overpaid = a.annual_tax_payable < 0.0;
  return a;
}

}  // namespace finstudio
