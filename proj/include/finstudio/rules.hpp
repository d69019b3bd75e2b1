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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace finstudio {

/// One income slab: `base_tax` is owed at `lower_bound`, and `marginal_rate`
/// applies to every unit above it up to the next slab.
struct TaxBracket {
  double lower_bound = 0.0;
  double base_tax = 0.0;
  double marginal_rate = 0.0;

  friend bool operator==(const TaxBracket&, const TaxBracket&) = default;
};

struct TaxRules {
  std::vector<TaxBracket> brackets;
  double teacher_rebate_fraction = 0.40;
  int months_per_year = 12;

  friend bool operator==(const TaxRules&, const TaxRules&) = default;
};

/// A labelled yearly pension increase, e.g. {"AR2012", 0.20}.
struct PensionIncreaseRule {
  std::string label;
  double fraction = 0.0;

  friend bool operator==(const PensionIncreaseRule&,
                         const PensionIncreaseRule&) = default;
};

struct PensionRules {
  int gross_factor_numerator = 7;
  int gross_factor_denominator = 300;
  double max_creditable_service = 30.0;
  double min_qualifying_service = 10.0;
  int commutation_numerator = 35;
  int commutation_denominator = 300;
  double gratuity_factor = 148.4628;
  std::vector<PensionIncreaseRule> increases = default_increases();
  double medical_allowance_fraction = 0.25;
  /// Age at retirement below or above which an advisory is attached.
  int superannuation_age = 60;

  static std::vector<PensionIncreaseRule> default_increases();

  friend bool operator==(const PensionRules&, const PensionRules&) = default;
};

struct ZakatRules {
  double gold_nisab_weight = 7.5;
  double silver_nisab_weight = 52.5;
  double zakat_rate = 0.025;

  friend bool operator==(const ZakatRules&, const ZakatRules&) = default;
};

/// Versioned bundle of every rate, slab, factor and threshold the engines
/// consume. Treated as immutable once loaded.
struct RuleSet {
  std::string id;
  std::string currency = "PKR";
  TaxRules tax;
  PensionRules pension;
  ZakatRules zakat;

  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

/// One broken invariant. `field` uses the document path, e.g.
/// "tax.brackets[1].base_tax".
struct Violation {
  std::string field;
  std::string rule;
  std::string value;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Checks every invariant, reporting violations in field-declaration order.
std::vector<Violation> validate_ruleset(const RuleSet& ruleset);

/// Parses and validates a rule-set JSON document. Omitted optional fields
/// take the defaults declared above.
///
/// Throws ParseError for malformed JSON, wrong types, missing required keys
/// or unknown keys; ValidationError carrying the first violation otherwise.
RuleSet load_ruleset(std::string_view document);

/// Reads and loads a rule-set file. Throws std::system_error-derived
/// std::filesystem::filesystem_error when the file cannot be opened.
RuleSet load_ruleset_file(const std::filesystem::path& path);

/// Canonical JSON rendering; load_ruleset(serialize_ruleset(r)) == r.
std::string serialize_ruleset(const RuleSet& ruleset);

/// The "pk-fy2014-15" rule-set, identical to rules/pk-fy2014-15.rules.json.
const RuleSet& default_ruleset();

inline constexpr std::string_view kDefaultRuleSetId = "pk-fy2014-15";

}  // namespace finstudio
