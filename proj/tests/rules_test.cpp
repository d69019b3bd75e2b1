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

#include "finstudio/rules.hpp"

#include <gtest/gtest.h>

#include <random>

#include "finstudio/error.hpp"

namespace finstudio {
namespace {

const std::string kShippedRules = std::string(FINSTUDIO_SOURCE_DIR) + "/rules/pk-fy2014-15.rules.json";

TEST(RuleSetTest, ShippedFileMatchesBuiltinDefault) {
  const RuleSet loaded = load_ruleset_file(kShippedRules);
  EXPECT_EQ(loaded, default_ruleset());
  EXPECT_EQ(loaded.id, "pk-fy2014-15");
  EXPECT_DOUBLE_EQ(loaded.tax.teacher_rebate_fraction, 0.40);
  EXPECT_DOUBLE_EQ(loaded.pension.gratuity_factor, 148.4628);
}

TEST(RuleSetTest, DefaultCarriesCalculatorConstants) {
  const RuleSet& r = default_ruleset();
  EXPECT_EQ(r.tax.months_per_year, 12);
  EXPECT_EQ(r.pension.gross_factor_numerator, 7);
  EXPECT_EQ(r.pension.gross_factor_denominator, 300);
  EXPECT_EQ(r.pension.max_creditable_service, 30.0);
  EXPECT_EQ(r.pension.min_qualifying_service, 10.0);
  EXPECT_EQ(r.pension.commutation_numerator, 35);
  EXPECT_EQ(r.pension.commutation_denominator, 300);
  const std::vector<PensionIncreaseRule> increases{{"AR2010", 0.15}, {"AR2011", 0.15},
                                                   {"AR2012", 0.20}, {"AR2013", 0.15},
                                                   {"AR2014", 0.10}, {"AR2015", 0.10}};
  EXPECT_EQ(r.pension.increases, increases);
  EXPECT_EQ(r.pension.medical_allowance_fraction, 0.25);
  EXPECT_EQ(r.zakat.gold_nisab_weight, 7.5);
  EXPECT_EQ(r.zakat.silver_nisab_weight, 52.5);
  EXPECT_EQ(r.zakat.zakat_rate, 0.025);
  EXPECT_TRUE(validate_ruleset(r).empty());
}

TEST(RuleSetTest, EmptyDocumentIsParseError) {
  EXPECT_THROW(load_ruleset(""), ParseError);
  EXPECT_THROW(load_ruleset("{"), ParseError);
  EXPECT_THROW(load_ruleset("[]"), ParseError);
}

TEST(RuleSetTest, OmittedOptionalBlocksTakeDefaults) {
  const RuleSet r = load_ruleset(R"({"id":"minimal","tax":{"brackets":[{"lower_bound":0,"base_tax":0,"marginal_rate":0.1}]}})");
  EXPECT_EQ(r.pension, PensionRules{});
  EXPECT_EQ(r.zakat, ZakatRules{});
  EXPECT_EQ(r.tax.teacher_rebate_fraction, 0.40);
  EXPECT_EQ(r.tax.months_per_year, 12);
}

TEST(RuleSetTest, DiscontinuousBracketsAreRejected) {
  // 0.05 x 400000 = 20000, not 10000.
  const char* doc = R"({"id":"broken","tax":{"brackets":[
      {"lower_bound":0,"base_tax":0,"marginal_rate":0.05},
      {"lower_bound":400000,"base_tax":10000,"marginal_rate":0.10}]}})";
  try {
    load_ruleset(doc);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "tax.brackets[1].base_tax");
    EXPECT_NE(std::string(e.what()).find("20000"), std::string::npos) << e.what();
  }
}

TEST(RuleSetTest, StructuralProblemsAreParseErrors) {
  EXPECT_THROW(load_ruleset(R"({"tax":{"brackets":[]}})"), ParseError);
  EXPECT_THROW(load_ruleset(R"({"id":"x"})"), ParseError);
  EXPECT_THROW(load_ruleset(R"({"id":"x","tax":{"brackets":{}}})"), ParseError);
  EXPECT_THROW(load_ruleset(R"({"id":"x","tax":{"brackets":[{"lower_bound":"0","base_tax":0,"marginal_rate":0}]}})"),
               ParseError);
  EXPECT_THROW(load_ruleset(R"({"id":"x","tax":{"brackets":[{"lower_bound":0,"base_tax":0,"marginal_rate":0}]},"zakat":{"zakat_rte":0.1}})"),
               ParseError);
  EXPECT_THROW(load_ruleset(R"({"id":"x","tax":{"brackets":[{"lower_bound":0,"base_tax":0,"marginal_rate":0}],"months_per_year":12.5}})"),
               ParseError);
}

TEST(ValidateRuleSetTest, ZakatRateAboveOne) {
  RuleSet r = default_ruleset();
  r.zakat.zakat_rate = 1.5;
  const auto v = validate_ruleset(r);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].field, "zakat.zakat_rate");
  EXPECT_EQ(v[0].value, "1.5");
}

TEST(ValidateRuleSetTest, ServiceCapBelowMinimum) {
  RuleSet r = default_ruleset();
  r.pension.max_creditable_service = 5;
  r.pension.min_qualifying_service = 10;
  const auto v = validate_ruleset(r);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].field, "pension.max_creditable_service");
}

TEST(ValidateRuleSetTest, ReportsInDeclarationOrder) {
  RuleSet r = default_ruleset();
  r.id.clear();
  r.tax.brackets[0].lower_bound = 10;
  r.tax.teacher_rebate_fraction = 2;
  r.pension.gross_factor_denominator = 0;
  r.zakat.gold_nisab_weight = 0;
  const auto v = validate_ruleset(r);
  std::vector<std::string> fields;
  for (const auto& x : v) fields.push_back(x.field);
  ASSERT_GE(fields.size(), 5u);
  EXPECT_EQ(fields.front(), "id");
  EXPECT_EQ(fields.back(), "zakat.gold_nisab_weight");
  EXPECT_LT(std::find(fields.begin(), fields.end(), "tax.teacher_rebate_fraction"),
            std::find(fields.begin(), fields.end(), "pension.gross_factor_denominator"));
}

TEST(ValidateRuleSetTest, CatchesBracketOrderingAndRates) {
  RuleSet r = default_ruleset();
  std::swap(r.tax.brackets[2], r.tax.brackets[3]);
  EXPECT_FALSE(validate_ruleset(r).empty());

  r = default_ruleset();
  r.tax.brackets[4].marginal_rate = -0.1;
  EXPECT_FALSE(validate_ruleset(r).empty());

  r = default_ruleset();
  r.pension.increases.push_back({"AR2010", 0.05});
  const auto v = validate_ruleset(r);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].rule, "must be unique");
}

// Random valid rule-sets: continuous slabs built from random widths/rates.
RuleSet random_ruleset(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> count(1, 12);
  RuleSet r;
  r.id = "rs-" + std::to_string(rng() % 100000);
  r.currency = rng() % 2 ? "PKR" : "USD";
  double lower = 0, base = unit(rng) < 0.3 ? std::floor(unit(rng) * 1000) : 0.0;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    const double rate = std::round(unit(rng) * 400) / 1000;  // 0.000 .. 0.400
    r.tax.brackets.push_back({lower, base, rate});
    const double width = std::round(unit(rng) * 1e6) + 1;
    base += rate * width;
    lower += width;
  }
  r.tax.teacher_rebate_fraction = unit(rng);
  r.tax.months_per_year = 1 + static_cast<int>(rng() % 24);
  r.pension.gross_factor_denominator = 100 + static_cast<int>(rng() % 400);
  r.pension.gross_factor_numerator = static_cast<int>(rng() % 50);
  r.pension.min_qualifying_service = 1 + unit(rng) * 20;
  r.pension.max_creditable_service = r.pension.min_qualifying_service + unit(rng) * 20;
  r.pension.commutation_denominator = 300;
  r.pension.commutation_numerator = static_cast<int>(rng() % 300);
  r.pension.gratuity_factor = 1 + unit(rng) * 200;
  r.pension.increases.clear();
  for (int i = 0, k = static_cast<int>(rng() % 8); i < k; ++i) {
    r.pension.increases.push_back({"AR" + std::to_string(2000 + i), unit(rng)});
  }
  r.pension.medical_allowance_fraction = unit(rng);
  r.pension.superannuation_age = 55 + static_cast<int>(rng() % 10);
  r.zakat.gold_nisab_weight = 0.5 + unit(rng) * 10;
  r.zakat.silver_nisab_weight = 0.5 + unit(rng) * 100;
  r.zakat.zakat_rate = 0.001 + unit(rng) * 0.5;
  return r;
}

TEST(RuleSetProperty, SerializeLoadRoundTrip) {
  std::mt19937_64 rng(20140615);
  for (int i = 0; i < 300; ++i) {
    const RuleSet r = random_ruleset(rng);
    ASSERT_TRUE(validate_ruleset(r).empty()) << serialize_ruleset(r);
    const RuleSet back = load_ruleset(serialize_ruleset(r));
    EXPECT_EQ(back, r);
    EXPECT_TRUE(validate_ruleset(back).empty());
  }
}

TEST(RuleSetTest, MissingFileIsFilesystemError) {
  EXPECT_THROW(load_ruleset_file("/nonexistent/x.rules.json"), std::filesystem::filesystem_error);
}

}  // namespace
}  // namespace finstudio
