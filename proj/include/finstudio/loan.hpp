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

#include <string_view>

#include "finstudio/error.hpp"

namespace finstudio {

enum class LoanField { amount, annual_rate_percent, periods };

/// The entry error raised when `field` is not a number.
NotANumber loan_entry_error(LoanField field);

struct LoanInput {
  double amount = 0.0;
  double annual_rate_percent = 0.0;
  double periods = 0.0;  ///< months or years; used as a bare count

  friend bool operator==(const LoanInput&, const LoanInput&) = default;
};

struct LoanSchedule {
  double monthly_payment = 0.0;
  double yearly_payment = 0.0;

  friend bool operator==(const LoanSchedule&, const LoanSchedule&) = default;
};

/// Builds a LoanInput from form text, checking the fields in the order
/// amount, rate, periods. A field that is not a number raises NotANumber
/// with the entry-error message and title, e.g. "Enter a number for Loan
/// Amount" / "Loan Amount Entry error".
LoanInput parse_loan_input(std::string_view amount, std::string_view annual_rate_percent,
                           std::string_view periods);

/// Simple interest, reproduced literally:
///   monthly = amount * rate / 100 / 12 * periods
///   yearly  = amount * rate / 100 * periods
/// This is not an amortizing annuity payment.
///
/// Throws InvalidInput for negative or non-finite fields.
LoanSchedule compute_loan(const LoanInput& input);

}  // namespace finstudio
