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

#include <cmath>

#include "finstudio/error.hpp"

namespace finstudio {

namespace {

// Display names are guesses; the acronyms are the only given labels.
constexpr std::array<LineItem<CashHoldings>, 5> kCashItems{{
    {"chb", "Cash in hand and bank", &CashHoldings::chb},
    {"bas", "Bank account savings", &CashHoldings::bas},
    {"sss", "Savings schemes and certificates", &CashHoldings::sss},
    {"myhl", "Money you hold or have lent", &CashHoldings::myhl},
    {"ocm", "Other cash money", &CashHoldings::ocm},
}};

constexpr std::array<LineItem<BusinessHoldings>, 4> kBusinessItems{{
    {"bi", "Business inventory", &BusinessHoldings::bi},
    {"pfi", "Profit from investments", &BusinessHoldings::pfi},
    {"bs", "Business shares", &BusinessHoldings::bs},
    {"ofb", "Other funds of business", &BusinessHoldings::ofb},
}};

void require_amount(double value, const std::string& field) {
  if (!std::isfinite(value) || value < 0.0) {
    throw InvalidInput(field + " must be a non-negative amount", field);
  }
}

}  // namespace

std::string_view to_string(ZakatCategory category) {
  switch (category) {
    case ZakatCategory::gold: return "gold";
    case ZakatCategory::silver: return "silver";
    case ZakatCategory::cash: return "cash";
    case ZakatCategory::business: return "business";
    case ZakatCategory::property: return "property";
  }
  return "unknown";
}

std::optional<ZakatCategory> zakat_category_from_string(std::string_view name) {
  for (auto c : kZakatCategories) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

std::span<const LineItem<CashHoldings>> cash_line_items() { return kCashItems; }
std::span<const LineItem<BusinessHoldings>> business_line_items() { return kBusinessItems; }

std::string_view nisab_notice(ZakatCategory category) {
  switch (category) {
    case ZakatCategory::gold:
      return "The total weight & Price of Gold is less than nisab for zakat deduction";
    case ZakatCategory::silver:
      return "The total weight & Price of Silver is less than nisab for zakat deduction";
    case ZakatCategory::cash:
      return "The total cash is less than nisab for zakat deduction";
    case ZakatCategory::business:
      return "The total Bussiness is less than nisab for zakat deduction";
    case ZakatCategory::property:
      return "The total Property is less than nisab for zakat deduction";
  }
  return {};
}

ZakatAssessment assess_zakat(const ZakatDeclaration& d, const RuleSet& ruleset) {
  if (d.empty()) throw NoCategories("declare at least one of gold, silver, cash, business, property");

  if (d.gold) {
    require_amount(d.gold->weight_tola, "gold.weight_tola");
    require_amount(d.gold->price_per_tola, "gold.price_per_tola");
  }
  if (d.silver) {
    require_amount(d.silver->weight_tola, "silver.weight_tola");
    require_amount(d.silver->price_per_tola, "silver.price_per_tola");
  }
  if (d.cash) {
    for (const auto& item : kCashItems) {
      require_amount((*d.cash).*item.member, "cash.items." + std::string(item.key));
    }
    require_amount(d.cash->nisab_amount, "cash.nisab_amount");
  }
  if (d.business) {
    for (const auto& item : kBusinessItems) {
      require_amount((*d.business).*item.member, "business.items." + std::string(item.key));
    }
    require_amount(d.business->nisab_amount, "business.nisab_amount");
  }
  if (d.property) {
    require_amount(d.property->net_property, "property.net_property");
    require_amount(d.property->other_property, "property.other_property");
    require_amount(d.property->nisab_amount, "property.nisab_amount");
  }

  ZakatAssessment a;
  a.ruleset_id = ruleset.id;
  auto gate = [&a](ZakatCategory c, bool meets_nisab, double value) {
    if (meets_nisab) {
      a.counted[static_cast<std::size_t>(c)] = value;
    } else {
      a.notices.push_back({c, std::string(nisab_notice(c))});
    }
  };

  const ZakatRules& rules = ruleset.zakat;
  if (d.gold) {
    gate(ZakatCategory::gold, d.gold->weight_tola >= rules.gold_nisab_weight,
         d.gold->weight_tola * d.gold->price_per_tola);
  }
  if (d.silver) {
    gate(ZakatCategory::silver, d.silver->weight_tola >= rules.silver_nisab_weight,
         d.silver->weight_tola * d.silver->price_per_tola);
  }
  if (d.cash) {
    const double total = d.cash->total();
    gate(ZakatCategory::cash, total >= d.cash->nisab_amount, total);
  }
  if (d.business) {
    const double total = d.business->total();
    gate(ZakatCategory::business, total >= d.business->nisab_amount, total);
  }
  if (d.property) {
    const double total = d.property->total();
    gate(ZakatCategory::property, total >= d.property->nisab_amount, total);
  }

  for (double v : a.counted) a.total_assets += v;
  a.zakat_due = a.total_assets * rules.zakat_rate;
  return a;
}

}  // namespace finstudio
