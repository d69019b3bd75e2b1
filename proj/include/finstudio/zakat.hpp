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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "finstudio/rules.hpp"

namespace finstudio {

enum class ZakatCategory { gold, silver, cash, business, property };

inline constexpr std::array kZakatCategories{ZakatCategory::gold, ZakatCategory::silver,
                                             ZakatCategory::cash, ZakatCategory::business,
                                             ZakatCategory::property};

std::string_view to_string(ZakatCategory category);
std::optional<ZakatCategory> zakat_category_from_string(std::string_view name);

/// Gold or silver held, by weight in tola.
struct MetalHolding {
  double weight_tola = 0.0;
  double price_per_tola = 0.0;

  friend bool operator==(const MetalHolding&, const MetalHolding&) = default;
};

/// Cash line items, keyed by their form acronyms. The acronyms are never
/// expanded at the source; see cash_line_items() for the display names
/// used here.
struct CashHoldings {
  double chb = 0.0;
  double bas = 0.0;
  double sss = 0.0;
  double myhl = 0.0;
  double ocm = 0.0;
  double nisab_amount = 0.0;

  double total() const { return chb + bas + sss + myhl + ocm; }
  friend bool operator==(const CashHoldings&, const CashHoldings&) = default;
};

struct BusinessHoldings {
  double bi = 0.0;
  double pfi = 0.0;
  double bs = 0.0;
  double ofb = 0.0;
  double nisab_amount = 0.0;

  double total() const { return bi + pfi + bs + ofb; }
  friend bool operator==(const BusinessHoldings&, const BusinessHoldings&) = default;
};

struct PropertyHoldings {
  double net_property = 0.0;
  double other_property = 0.0;
  double nisab_amount = 0.0;

  double total() const { return net_property + other_property; }
  friend bool operator==(const PropertyHoldings&, const PropertyHoldings&) = default;
};

/// Descriptor for one opaque line item: wire key, a best-guess display
/// name, and the member it lands in.
template <typename Holdings>
struct LineItem {
  std::string_view key;
  std::string_view display_name;
  double Holdings::*member;
};

std::span<const LineItem<CashHoldings>> cash_line_items();
std::span<const LineItem<BusinessHoldings>> business_line_items();

struct ZakatDeclaration {
  std::optional<MetalHolding> gold;
  std::optional<MetalHolding> silver;
  std::optional<CashHoldings> cash;
  std::optional<BusinessHoldings> business;
  std::optional<PropertyHoldings> property;

  bool empty() const { return !gold && !silver && !cash && !business && !property; }
  friend bool operator==(const ZakatDeclaration&, const ZakatDeclaration&) = default;
};

struct ZakatNotice {
  ZakatCategory category;
  std::string message;

  friend bool operator==(const ZakatNotice&, const ZakatNotice&) = default;
};

struct ZakatAssessment {
  std::string ruleset_id;
  /// Counted value per category in kZakatCategories order; 0 when excluded
  /// or not declared.
  std::array<double, 5> counted{};
  std::vector<ZakatNotice> notices;
  double total_assets = 0.0;
  double zakat_due = 0.0;

  double counted_value(ZakatCategory c) const { return counted[static_cast<std::size_t>(c)]; }
  friend bool operator==(const ZakatAssessment&, const ZakatAssessment&) = default;
};

/// Below-nisab message for a category, verbatim from the original app.
std::string_view nisab_notice(ZakatCategory category);

/// Dialog title the original app shows with every nisab notice.
inline constexpr std::string_view kNisabNoticeTitle = "wrong Entery";

/// Assesses zakat. Each declared category is counted in full when it meets
/// its nisab (weight for gold and silver, the declared nisab_amount for the
/// rest; comparisons are inclusive) and otherwise contributes nothing and
/// yields one notice.
///
/// Throws NoCategories for an empty declaration, InvalidInput for a
/// negative or non-finite amount.
ZakatAssessment assess_zakat(const ZakatDeclaration& declaration, const RuleSet& ruleset);

}  // namespace finstudio
