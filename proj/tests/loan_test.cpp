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

#include <gtest/gtest.h>

#include <random>

#include "finstudio/error.hpp"
#include "finstudio/numeric.hpp"
#include "oracles.hpp"

namespace finstudio {
namespace {

TEST(ComputeLoanTest, TwelvePercentOverTwelvePeriods) {
  const auto s = compute_loan({100'000, 12, 12});
  EXPECT_EQ(format_amount(s.monthly_payment), "12000.00");
  EXPECT_EQ(format_amount(s.yearly_payment), "144000.00");
  const auto [m, y] = testing::loan_oracle(100'000, 12, 12);
  EXPECT_NEAR(s.monthly_payment, static_cast<double>(m), 1e-9);
  EXPECT_NEAR(s.yearly_payment, static_cast<double>(y), 1e-9);
}

TEST(ComputeLoanTest, EightPercentOverFivePeriods) {
  const auto s = compute_loan({500'000, 8, 5});
  EXPECT_EQ(format_amount(s.monthly_payment), "16666.67");
  EXPECT_EQ(format_amount(s.yearly_payment), "200000.00");
}

TEST(ComputeLoanTest, ZeroFactorsGiveZero) {
  for (LoanInput in : {LoanInput{0, 12, 12}, LoanInput{100'000, 0, 12}, LoanInput{100'000, 12, 0}}) {
    const auto s = compute_loan(in);
    EXPECT_EQ(s.monthly_payment, 0);
    EXPECT_EQ(s.yearly_payment, 0);
  }
}

TEST(ParseLoanInputTest, EntryErrors) {
  struct Case {
    const char *amount, *rate, *periods, *message, *title, *field;
  } const cases[] = {
      {"abc", "12", "12", "Enter a number for Loan Amount", "Loan Amount Entry error", "amount"},
      {"100000", "x", "12", "Enter a number for rate of interest", "Rate of interest Entry error",
       "annual_rate_percent"},
      {"100000", "12", "", "Enter a number for number of months/years",
       "Number of months/years Entry error", "periods"},
      // The amount is checked first.
      {"", "", "", "Enter a number for Loan Amount", "Loan Amount Entry error", "amount"},
  };
  for (const auto& c : cases) {
    try {
      parse_loan_input(c.amount, c.rate, c.periods);
      FAIL() << c.message;
    } catch (const NotANumber& e) {
      EXPECT_STREQ(e.what(), c.message);
      EXPECT_EQ(e.title(), c.title);
      EXPECT_EQ(e.field(), c.field);
    }
  }
  EXPECT_EQ(parse_loan_input("100000", "12.5", " 6 "), (LoanInput{100'000, 12.5, 6}));
}

TEST(ComputeLoanTest, NegativeFieldsAreInvalid) {
  EXPECT_THROW(compute_loan({-1, 12, 12}), InvalidInput);
  EXPECT_THROW(compute_loan({1, -12, 12}), InvalidInput);
  EXPECT_THROW(compute_loan({1, 12, -1}), InvalidInput);
  EXPECT_THROW(compute_loan({NAN, 12, 1}), NotANumber);
}

TEST(LoanProperty, YearlyIsTwelveMonthly) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> amount(0, 1e8), rate(0, 40), periods(0, 480);
  for (int i = 0; i < 10'000; ++i) {
    const auto s = compute_loan({amount(rng), rate(rng), periods(rng)});
    EXPECT_NEAR(s.yearly_payment, 12 * s.monthly_payment,
                1e-9 * std::max(1.0, std::abs(s.yearly_payment)));
  }
}

TEST(LoanProperty, LinearInEachField) {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> amount(1, 1e7), rate(0.1, 40), periods(1, 480), k(0.1, 10);
  auto rel = [](double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); };
  for (int i = 0; i < 1000; ++i) {
    const LoanInput in{amount(rng), rate(rng), periods(rng)};
    const double f = k(rng);
    const auto base = compute_loan(in);
    for (int field = 0; field < 3; ++field) {
      LoanInput scaled = in;
      (field == 0 ? scaled.amount : field == 1 ? scaled.annual_rate_percent : scaled.periods) *= f;
      const auto s = compute_loan(scaled);
      EXPECT_TRUE(rel(s.monthly_payment, f * base.monthly_payment));
      EXPECT_TRUE(rel(s.yearly_payment, f * base.yearly_payment));
    }
  }
}

}  // namespace
}  // namespace finstudio
