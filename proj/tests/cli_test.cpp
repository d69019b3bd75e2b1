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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "finstudio/codec.hpp"

namespace finstudio::cli {
namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string source(const std::string& rel) { return std::string(FINSTUDIO_SOURCE_DIR) + "/" + rel; }

TEST(CliTest, LoanText) {
  const auto r = invoke({"loan", "--amount", "100000", "--rate", "12", "--periods", "12"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("Monthly payment amount 12000.00"), std::string::npos);
  EXPECT_NE(r.out.find("Yearly payment amount 144000.00"), std::string::npos);
}

TEST(CliTest, LoanJson) {
  const auto r = invoke({"loan", "--amount", "100000", "--rate", "12", "--periods", "12",
                         "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = codec::Json::parse(r.out);
  EXPECT_EQ(j["display"]["monthly_payment"], "12000.00");
  EXPECT_EQ(j["monthly_payment"], 12000.0);
}

TEST(CliTest, LoanEntryError) {
  const auto r = invoke({"loan", "--amount", "abc", "--rate", "12", "--periods", "12"});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("Enter a number for Loan Amount"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(CliTest, PensionTooShort) {
  const auto r = invoke({"pension", "--last-basic-pay", "20000", "--qualifying-service", "9"});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("Please Enter >= 10 Years qualifying Service"), std::string::npos);
}

TEST(CliTest, PensionText) {
  const auto r = invoke({"pension", "--last-basic-pay", "15000", "--qualifying-service", "25"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("Total Gratuity 151555.78"), std::string::npos);
}

TEST(CliTest, TaxWithShippedRuleSet) {
  const auto r = invoke({"tax", "--monthly-income", "100000", "--ruleset",
                         source("rules/pk-fy2014-15.rules.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("Annual tax 62500.00"), std::string::npos);
}

TEST(CliTest, ZakatCategories) {
  const auto r = invoke({"zakat", "--gold-tola", "10", "--gold-price", "50000", "--cash",
                         "chb=100000", "--cash", "bas=20000", "--cash-nisab", "52000"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("Zakat due 15500.00"), std::string::npos);
  EXPECT_EQ(invoke({"zakat"}).code, kExitValidation);
  EXPECT_EQ(invoke({"zakat", "--cash", "xyz=1", "--cash-nisab", "1"}).code, kExitValidation);
}

TEST(CliTest, StatsFixture) {
  const auto r = invoke({"stats", "--counts-file", source("data/survey/table2.counts")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "Min 1.00\nMax 3.00\nMedian 2.00\nMean 1.69\nStdDev 0.63\n");
  EXPECT_EQ(invoke({"stats", "--counts", "1:16,2:16"}).out,
            "Min 1.00\nMax 2.00\nMedian 1.50\nMean 1.50\nStdDev 0.50\n");
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"loan", "--amount", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"stats", "--counts", "1:1", "--counts-file", "x"}).code, kExitUsage);
  EXPECT_EQ(invoke({"loan", "--amount", "1", "--rate", "1", "--periods", "1", "--format", "xml"}).code,
            kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
  EXPECT_EQ(invoke({"stats", "--counts-file", "/nonexistent.counts"}).code, kExitNoInput);
  EXPECT_EQ(invoke({"tax", "--monthly-income", "1", "--ruleset", "/nonexistent.json"}).code,
            kExitNoInput);
  EXPECT_EQ(invoke({"stats", "--counts", "1:0"}).code, kExitValidation);
}

}  // namespace
}  // namespace finstudio::cli
