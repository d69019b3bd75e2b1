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

#include "finstudio/pension.hpp"

#include <algorithm>
#include <cmath>

#include "finstudio/error.hpp"

namespace finstudio {

namespace {

std::string years_text(double years) {
  if (years == std::floor(years) && std::abs(years) < 1e15) {
    return std::to_string(static_cast<long long>(years));
  }
  return format_amount(years);
}

void check_date_order(const PensionerDetails& d) {
  struct Named {
    const std::optional<Date>* date;
    const char* field;
  };
  const Named order[] = {{&d.date_of_birth, "date_of_birth"},
                         {&d.date_of_appointment, "date_of_appointment"},
                         {&d.date_of_retirement, "date_of_retirement"}};
  const Named* prev = nullptr;
  for (const auto& cur : order) {
    if (!cur.date->has_value()) continue;
    if (prev != nullptr && !(**prev->date < **cur.date)) {
      throw InvalidInput(std::string(cur.field) + " must be after " + prev->field, cur.field);
    }
    prev = &cur;
  }
}

// Completed years between two dates.
int whole_years_between(const Date& from, const Date& to) {
  int years = static_cast<int>(to.year()) - static_cast<int>(from.year());
  if (to.month() < from.month() || (to.month() == from.month() && to.day() < from.day())) {
    --years;
  }
  return years;
}

}  // namespace

PensionAward compute_pension(const PensionInput& input, const RuleSet& ruleset) {
  const PensionRules& rules = ruleset.pension;
  if (!std::isfinite(input.qualifying_service) || input.qualifying_service < 0.0) {
    throw InvalidInput("qualifying_service must be a non-negative number of years",
                       "qualifying_service");
  }
  if (input.qualifying_service < rules.min_qualifying_service) {
    throw ServiceTooShort("Please Enter >= " + years_text(rules.min_qualifying_service) +
                              " Years qualifying Service",
                          "qualifying_service", std::string(kServiceTooShortTitle));
  }
  if (!std::isfinite(input.last_basic_pay) || input.last_basic_pay < 0.0) {
    throw InvalidInput("last_basic_pay must be a non-negative amount", "last_basic_pay");
  }
  if (input.details.bps && *input.details.bps < 0) {
    throw InvalidInput("bps must be a non-negative grade", "bps");
  }
  check_date_order(input.details);

  PensionAward award;
  award.ruleset_id = ruleset.id;
  award.details = input.details;
  award.creditable_service = std::min(input.qualifying_service, rules.max_creditable_service);
  award.gross_pension = input.last_basic_pay * rules.gross_factor_numerator *
                        award.creditable_service / rules.gross_factor_denominator;
  award.commuted_portion =
      award.gross_pension * rules.commutation_numerator / rules.commutation_denominator;
  award.net_pension = award.gross_pension - award.commuted_portion;
  award.total_gratuity = award.commuted_portion * rules.gratuity_factor;

  double total = award.net_pension;
  for (const auto& inc : rules.increases) {
    const double amount = award.net_pension * inc.fraction;
    award.increases.push_back({inc.label, amount});
    total += amount;
  }
  award.medical_allowance = award.net_pension * rules.medical_allowance_fraction;
  award.total_pension_per_month = total + award.medical_allowance;

  const auto& d = input.details;
  if (d.date_of_birth && d.date_of_retirement) {
    const int age = whole_years_between(*d.date_of_birth, *d.date_of_retirement);
    if (age != rules.superannuation_age) {
      award.advisories.push_back("Age at retirement is " + std::to_string(age) +
                                 " years; superannuation age is " +
                                 std::to_string(rules.superannuation_age) + " years");
    }
  }
  return award;
}

}  // namespace finstudio
