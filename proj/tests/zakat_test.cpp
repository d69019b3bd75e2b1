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

#include "finstudio/zakat.hpp"

#include <gtest/gtest.h>

#include <random>

#include "finstudio/error.hpp"

namespace finstudio {
namespace {

const RuleSet& rules() { return default_ruleset(); }

TEST(AssessZakatTest, GoldAndCash) {
  ZakatDeclaration d;
  d.gold = MetalHolding{10, 50'000};
  d.cash = CashHoldings{100'000, 20'000, 0, 0, 0, 52'000};
  const auto a = assess_zakat(d, rules());
  EXPECT_EQ(a.counted_value(ZakatCategory::gold), 500'000);
  EXPECT_EQ(a.counted_value(ZakatCategory::cash), 120'000);
  EXPECT_EQ(a.counted_value(ZakatCategory::silver), 0);
  EXPECT_EQ(a.total_assets, 620'000);
  EXPECT_DOUBLE_EQ(a.zakat_due, 15'500);
  EXPECT_TRUE(a.notices.empty());
}

TEST(AssessZakatTest, ZeroAmountsEveryCategoryBelowNisab) {
  ZakatDeclaration d;
  d.gold = MetalHolding{};
  d.silver = MetalHolding{};
  d.cash = CashHoldings{0, 0, 0, 0, 0, 52'000};
  d.business = BusinessHoldings{0, 0, 0, 0, 52'000};
  d.property = PropertyHoldings{0, 0, 52'000};
  const auto a = assess_zakat(d, rules());
  ASSERT_EQ(a.notices.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(a.notices[i].category, kZakatCategories[i]);
    EXPECT_EQ(a.notices[i].message, nisab_notice(kZakatCategories[i]));
  }
  EXPECT_EQ(a.total_assets, 0);
  EXPECT_EQ(a.zakat_due, 0);
}

TEST(AssessZakatTest, ZeroNisabCountsZeroWithoutNotice) {
  ZakatDeclaration d;
  d.cash = CashHoldings{};
  const auto a = assess_zakat(d, rules());
  EXPECT_TRUE(a.notices.empty());
  EXPECT_EQ(a.total_assets, 0);
}

TEST(AssessZakatTest, WeightGatesAreInclusive) {
  ZakatDeclaration d;
  d.gold = MetalHolding{7.5, 40'000};
  d.silver = MetalHolding{52.5, 1'000};
  const auto a = assess_zakat(d, rules());
  EXPECT_EQ(a.counted_value(ZakatCategory::gold), 300'000);
  EXPECT_EQ(a.counted_value(ZakatCategory::silver), 52'500);
  EXPECT_TRUE(a.notices.empty());

  d.gold = MetalHolding{std::nextafter(7.5, 0.0), 40'000};
  d.silver = MetalHolding{std::nextafter(52.5, 0.0), 1'000};
  const auto b = assess_zakat(d, rules());
  EXPECT_EQ(b.total_assets, 0);
  EXPECT_EQ(b.notices.size(), 2u);
}

TEST(AssessZakatTest, SilverBelowNisabAtAnyPrice) {
  for (double price : {0.0, 1.0, 1e9}) {
    ZakatDeclaration d;
    d.silver = MetalHolding{40, price};
    const auto a = assess_zakat(d, rules());
    ASSERT_EQ(a.notices.size(), 1u);
    EXPECT_EQ(a.notices[0].message,
              "The total weight & Price of Silver is less than nisab for zakat deduction");
    EXPECT_EQ(a.total_assets, 0);
  }
}

TEST(AssessZakatTest, NoticeTextsAreVerbatim) {
  EXPECT_EQ(nisab_notice(ZakatCategory::gold),
            "The total weight & Price of Gold is less than nisab for zakat deduction");
  EXPECT_EQ(nisab_notice(ZakatCategory::cash),
            "The total cash is less than nisab for zakat deduction");
  EXPECT_EQ(nisab_notice(ZakatCategory::business),
            "The total Bussiness is less than nisab for zakat deduction");
  EXPECT_EQ(nisab_notice(ZakatCategory::property),
            "The total Property is less than nisab for zakat deduction");
  EXPECT_EQ(kNisabNoticeTitle, "wrong Entery");
}

TEST(AssessZakatTest, Errors) {
  EXPECT_THROW(assess_zakat(ZakatDeclaration{}, rules()), NoCategories);
  ZakatDeclaration d;
  d.gold = MetalHolding{-1, 10};
  EXPECT_THROW(assess_zakat(d, rules()), InvalidInput);
  d = {};
  d.business = BusinessHoldings{1, 2, -3, 4, 0};
  try {
    assess_zakat(d, rules());
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_EQ(e.field(), "business.items.bs");
  }
  d = {};
  d.property = PropertyHoldings{1, 1, -1};
  EXPECT_THROW(assess_zakat(d, rules()), InvalidInput);
}

TEST(LineItemTest, KeysAreTheFormAcronyms) {
  std::vector<std::string_view> cash, business;
  for (const auto& i : cash_line_items()) cash.push_back(i.key);
  for (const auto& i : business_line_items()) business.push_back(i.key);
  EXPECT_EQ(cash, (std::vector<std::string_view>{"chb", "bas", "sss", "myhl", "ocm"}));
  EXPECT_EQ(business, (std::vector<std::string_view>{"bi", "pfi", "bs", "ofb"}));
}

ZakatDeclaration random_declaration(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> amount(0, 200'000), weight(0, 120), price(0, 80'000),
      unit(0, 1);
  ZakatDeclaration d;
  do {
    if (unit(rng) < 0.6) d.gold = MetalHolding{weight(rng) / 8, price(rng)};
    if (unit(rng) < 0.6) d.silver = MetalHolding{weight(rng), price(rng) / 50};
    if (unit(rng) < 0.6) {
      d.cash = CashHoldings{amount(rng), amount(rng), amount(rng), amount(rng), amount(rng),
                            amount(rng) * 2};
    }
    if (unit(rng) < 0.6) {
      d.business = BusinessHoldings{amount(rng), amount(rng), amount(rng), amount(rng),
                                    amount(rng) * 2};
    }
    if (unit(rng) < 0.6) d.property = PropertyHoldings{amount(rng), amount(rng), amount(rng)};
  } while (d.empty());
  return d;
}

TEST(ZakatProperty, DueIsRateTimesTotal) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 1000; ++i) {
    const auto a = assess_zakat(random_declaration(rng), rules());
    EXPECT_NEAR(a.zakat_due, 0.025 * a.total_assets, 1e-9 * std::max(1.0, a.total_assets));
    double sum = 0;
    for (double v : a.counted) sum += v;
    EXPECT_EQ(a.total_assets, sum);
  }
}

TEST(ZakatProperty, CategoriesAreAllOrNothing) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 1000; ++i) {
    const auto d = random_declaration(rng);
    const auto a = assess_zakat(d, rules());
    const std::optional<double> full[] = {
        d.gold ? std::optional(d.gold->weight_tola * d.gold->price_per_tola) : std::nullopt,
        d.silver ? std::optional(d.silver->weight_tola * d.silver->price_per_tola) : std::nullopt,
        d.cash ? std::optional(d.cash->total()) : std::nullopt,
        d.business ? std::optional(d.business->total()) : std::nullopt,
        d.property ? std::optional(d.property->total()) : std::nullopt};
    for (std::size_t c = 0; c < 5; ++c) {
      const auto notices = std::count_if(a.notices.begin(), a.notices.end(), [&](const auto& n) {
        return n.category == kZakatCategories[c];
      });
      if (!full[c]) {
        EXPECT_EQ(a.counted[c], 0);
        EXPECT_EQ(notices, 0);
      } else if (notices == 1) {
        EXPECT_EQ(a.counted[c], 0);
      } else {
        EXPECT_EQ(notices, 0);
        EXPECT_EQ(a.counted[c], *full[c]);
      }
    }
  }
}

TEST(ZakatProperty, GatesIgnorePrice) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> price(0, 1e6);
  for (double w : {7.0, 7.4999, 7.5, 7.5001, 8.0}) {
    ZakatDeclaration d;
    d.gold = MetalHolding{w, 0};
    const bool included = assess_zakat(d, rules()).notices.empty();
    for (int i = 0; i < 50; ++i) {
      d.gold->price_per_tola = price(rng);
      EXPECT_EQ(assess_zakat(d, rules()).notices.empty(), included);
    }
    EXPECT_EQ(included, w >= 7.5);
  }
}

TEST(ZakatProperty, RaisingCountedItemRaisesTotal) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> bump(0, 10'000);
  for (int i = 0; i < 300; ++i) {
    ZakatDeclaration d;
    d.cash = CashHoldings{60'000, 10'000, 5'000, 0, 1'000, 52'000};
    d.gold = MetalHolding{10, 40'000};
    const auto before = assess_zakat(d, rules());
    const double delta = bump(rng);
    const auto& item = cash_line_items()[static_cast<std::size_t>(i % 5)];
    (*d.cash).*item.member += delta;
    const auto after = assess_zakat(d, rules());
    EXPECT_NEAR(after.total_assets - before.total_assets, delta, 1e-6);
    EXPECT_NEAR(after.zakat_due - before.zakat_due, 0.025 * delta, 1e-6);
  }
}

TEST(ZakatProperty, DroppingBelowNisabCategoryChangesNothing) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    const auto d = random_declaration(rng);
    const auto a = assess_zakat(d, rules());
    for (const auto& n : a.notices) {
      ZakatDeclaration reduced = d;
      switch (n.category) {
        case ZakatCategory::gold: reduced.gold.reset(); break;
        case ZakatCategory::silver: reduced.silver.reset(); break;
        case ZakatCategory::cash: reduced.cash.reset(); break;
        case ZakatCategory::business: reduced.business.reset(); break;
        case ZakatCategory::property: reduced.property.reset(); break;
      }
      if (reduced.empty()) continue;
      const auto b = assess_zakat(reduced, rules());
      EXPECT_EQ(b.total_assets, a.total_assets);
      EXPECT_EQ(b.zakat_due, a.zakat_due);
    }
  }
}

}  // namespace
}  // namespace finstudio
