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

#include "finstudio/loan.hpp"

#include <cmath>
#include <string>

#include "finstudio/error.hpp"
#include "finstudio/numeric.hpp"

namespace finstudio {

namespace {

struct FieldText {
  const char* field;
  const char* message;
  const char* title;
};

constexpr FieldText kAmount{"amount", "Enter a number for Loan Amount", "Loan Amount Entry error"};
constexpr FieldText kRate{"annual_rate_percent", "Enter a number for rate of interest",
                          "Rate of interest Entry error"};
constexpr FieldText kPeriods{"periods", "Enter a number for number of months/years",
                             "Number of months/years Entry error"};

const FieldText& text_for(LoanField field) {
  switch (field) {
    case LoanField::amount: return kAmount;
    case LoanField::annual_rate_percent: return kRate;
    case LoanField::periods: return kPeriods;
  }
  return kAmount;
}

double parse_field(std::string_view text, const FieldText& f) {
  if (auto value = parse_number(text)) return *value;
  throw NotANumber(f.message, f.field, f.title);
}

void require_non_negative(double value, const FieldText& f) {
  if (!std::isfinite(value)) throw NotANumber(f.message, f.field, f.title);
  if (value < 0.0) throw InvalidInput(std::string(f.field) + " must not be negative", f.field);
}

}  // namespace

NotANumber loan_entry_error(LoanField field) {
  const FieldText& f = text_for(field);
  return NotANumber(f.message, f.field, f.title);
}

LoanInput parse_loan_input(std::string_view amount, std::string_view annual_rate_percent,
                           std::string_view periods) {
  LoanInput input;
  input.amount = parse_field(amount, kAmount);
  input.annual_rate_percent = parse_field(annual_rate_percent, kRate);
  input.periods = parse_field(periods, kPeriods);
  return input;
}

LoanSchedule compute_loan(const LoanInput& input) {
  require_non_negative(input.amount, kAmount);
  require_non_negative(input.annual_rate_percent, kRate);
  require_non_negative(input.periods, kPeriods);

  const double yearly_interest = input.amount * input.annual_rate_percent / 100;
  return {yearly_interest / 12 * input.periods, yearly_interest * input.periods};
}

}  // namespace finstudio
