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

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "finstudio/error.hpp"

namespace finstudio {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// Slab continuity is checked to within one paisa.
constexpr double kContinuityTolerance = 0.01;

std::string num(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

bool in_unit_interval(double v) { return v >= 0.0 && v <= 1.0; }

class Checker {
 public:
  void require(bool ok, std::string field, std::string rule, std::string value) {
    if (!ok) out_.push_back({std::move(field), std::move(rule), std::move(value)});
  }
  std::vector<Violation> take() { return std::move(out_); }

 private:
  std::vector<Violation> out_;
};

// --- document reading -----------------------------------------------------

void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<std::string_view> known) {
  for (const auto& [key, _] : obj.items()) {
    bool found = false;
    for (auto k : known) found = found || key == k;
    if (!found) {
      throw ParseError("unknown key '" + key + "' in " +
                           (path.empty() ? std::string("document") : path),
                       path.empty() ? key : path + "." + key);
    }
  }
}

const json& require_object(const json& parent, const std::string& key,
                           const std::string& path) {
  auto it = parent.find(key);
  if (it == parent.end()) throw ParseError("missing required key '" + path + "'", path);
  if (!it->is_object()) throw ParseError("'" + path + "' must be an object", path);
  return *it;
}

double read_double(const json& value, const std::string& path) {
  if (!value.is_number()) throw ParseError("'" + path + "' must be a number", path);
  return value.get<double>();
}

int read_int(const json& value, const std::string& path) {
  if (!value.is_number_integer()) {
    throw ParseError("'" + path + "' must be an integer", path);
  }
  return value.get<int>();
}

std::string read_string(const json& value, const std::string& path) {
  if (!value.is_string()) throw ParseError("'" + path + "' must be a string", path);
  return value.get<std::string>();
}

template <typename T, typename Reader>
void read_optional(const json& obj, const char* key, const std::string& path,
                   T& target, Reader reader) {
  if (auto it = obj.find(key); it != obj.end()) target = reader(*it, path + "." + key);
}

TaxRules read_tax(const json& obj) {
  reject_unknown_keys(obj, "tax", {"brackets", "teacher_rebate_fraction", "months_per_year"});
  TaxRules tax;
  auto it = obj.find("brackets");
  if (it == obj.end()) throw ParseError("missing required key 'tax.brackets'", "tax.brackets");
  if (!it->is_array()) throw ParseError("'tax.brackets' must be an array", "tax.brackets");
  for (std::size_t i = 0; i < it->size(); ++i) {
    const std::string path = "tax.brackets[" + std::to_string(i) + "]";
    const json& b = (*it)[i];
    if (!b.is_object()) throw ParseError("'" + path + "' must be an object", path);
    reject_unknown_keys(b, path, {"lower_bound", "base_tax", "marginal_rate"});
    TaxBracket bracket;
    for (const char* key : {"lower_bound", "base_tax", "marginal_rate"}) {
      if (!b.contains(key)) {
        throw ParseError("missing required key '" + path + "." + key + "'",
                         path + "." + key);
      }
    }
    bracket.lower_bound = read_double(b["lower_bound"], path + ".lower_bound");
    bracket.base_tax = read_double(b["base_tax"], path + ".base_tax");
    bracket.marginal_rate = read_double(b["marginal_rate"], path + ".marginal_rate");
    tax.brackets.push_back(bracket);
  }
  read_optional(obj, "teacher_rebate_fraction", "tax", tax.teacher_rebate_fraction, read_double);
  read_optional(obj, "months_per_year", "tax", tax.months_per_year, read_int);
  return tax;
}

PensionRules read_pension(const json& obj) {
  reject_unknown_keys(
      obj, "pension",
      {"gross_factor_numerator", "gross_factor_denominator", "max_creditable_service",
       "min_qualifying_service", "commutation_numerator", "commutation_denominator",
       "gratuity_factor", "increases", "medical_allowance_fraction", "superannuation_age"});
  PensionRules p;
  read_optional(obj, "gross_factor_numerator", "pension", p.gross_factor_numerator, read_int);
  read_optional(obj, "gross_factor_denominator", "pension", p.gross_factor_denominator, read_int);
  read_optional(obj, "max_creditable_service", "pension", p.max_creditable_service, read_double);
  read_optional(obj, "min_qualifying_service", "pension", p.min_qualifying_service, read_double);
  read_optional(obj, "commutation_numerator", "pension", p.commutation_numerator, read_int);
  read_optional(obj, "commutation_denominator", "pension", p.commutation_denominator, read_int);
  read_optional(obj, "gratuity_factor", "pension", p.gratuity_factor, read_double);
  if (auto it = obj.find("increases"); it != obj.end()) {
    if (!it->is_array()) throw ParseError("'pension.increases' must be an array", "pension.increases");
    p.increases.clear();
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = "pension.increases[" + std::to_string(i) + "]";
      const json& e = (*it)[i];
      if (!e.is_object()) throw ParseError("'" + path + "' must be an object", path);
      reject_unknown_keys(e, path, {"label", "fraction"});
      if (!e.contains("label") || !e.contains("fraction")) {
        throw ParseError("'" + path + "' needs 'label' and 'fraction'", path);
      }
      p.increases.push_back({read_string(e["label"], path + ".label"),
                             read_double(e["fraction"], path + ".fraction")});
    }
  }
  read_optional(obj, "medical_allowance_fraction", "pension", p.medical_allowance_fraction, read_double);
  read_optional(obj, "superannuation_age", "pension", p.superannuation_age, read_int);
  return p;
}

ZakatRules read_zakat(const json& obj) {
  reject_unknown_keys(obj, "zakat", {"gold_nisab_weight", "silver_nisab_weight", "zakat_rate"});
  ZakatRules z;
  read_optional(obj, "gold_nisab_weight", "zakat", z.gold_nisab_weight, read_double);
  read_optional(obj, "silver_nisab_weight", "zakat", z.silver_nisab_weight, read_double);
  read_optional(obj, "zakat_rate", "zakat", z.zakat_rate, read_double);
  return z;
}

}  // namespace

std::vector<PensionIncreaseRule> PensionRules::default_increases() {
  return {{"AR2010", 0.15}, {"AR2011", 0.15}, {"AR2012", 0.20},
          {"AR2013", 0.15}, {"AR2014", 0.10}, {"AR2015", 0.10}};
}

std::vector<Violation> validate_ruleset(const RuleSet& r) {
  Checker c;
  c.require(!r.id.empty(), "id", "must be non-empty", "\"\"");

  const auto& brackets = r.tax.brackets;
  c.require(!brackets.empty(), "tax.brackets", "must contain at least one bracket", "[]");
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    const auto& b = brackets[i];
    const std::string path = "tax.brackets[" + std::to_string(i) + "]";
    c.require(b.lower_bound >= 0.0 && std::isfinite(b.lower_bound), path + ".lower_bound",
              "must be >= 0", num(b.lower_bound));
    if (i == 0) {
      c.require(b.lower_bound == 0.0, path + ".lower_bound", "first bracket must start at 0",
                num(b.lower_bound));
    }
    c.require(b.base_tax >= 0.0 && std::isfinite(b.base_tax), path + ".base_tax",
              "must be >= 0", num(b.base_tax));
    c.require(in_unit_interval(b.marginal_rate), path + ".marginal_rate",
              "must be in [0, 1]", num(b.marginal_rate));
    if (i == 0) continue;
    const auto& prev = brackets[i - 1];
    const bool ascending = b.lower_bound > prev.lower_bound;
    c.require(ascending, path + ".lower_bound",
              "must be strictly greater than the previous lower_bound " + num(prev.lower_bound),
              num(b.lower_bound));
    if (ascending) {
      const double expected =
          prev.base_tax + prev.marginal_rate * (b.lower_bound - prev.lower_bound);
      c.require(std::abs(b.base_tax - expected) <= kContinuityTolerance, path + ".base_tax",
                "must equal previous base_tax + marginal_rate x width (" + num(expected) +
                    ") for a continuous tax function",
                num(b.base_tax));
    }
  }
  c.require(in_unit_interval(r.tax.teacher_rebate_fraction), "tax.teacher_rebate_fraction",
            "must be in [0, 1]", num(r.tax.teacher_rebate_fraction));
  c.require(r.tax.months_per_year > 0, "tax.months_per_year", "must be > 0",
            std::to_string(r.tax.months_per_year));

  const auto& p = r.pension;
  c.require(p.gross_factor_numerator >= 0, "pension.gross_factor_numerator", "must be >= 0",
            std::to_string(p.gross_factor_numerator));
  c.require(p.gross_factor_denominator > 0, "pension.gross_factor_denominator", "must be > 0",
            std::to_string(p.gross_factor_denominator));
  if (p.gross_factor_denominator > 0) {
    c.require(p.gross_factor_numerator <= p.gross_factor_denominator,
              "pension.gross_factor_numerator", "gross factor must be a fraction in [0, 1]",
              std::to_string(p.gross_factor_numerator) + "/" +
                  std::to_string(p.gross_factor_denominator));
  }
  c.require(p.max_creditable_service >= p.min_qualifying_service &&
                std::isfinite(p.max_creditable_service),
            "pension.max_creditable_service", "must be >= min_qualifying_service",
            num(p.max_creditable_service));
  c.require(p.min_qualifying_service > 0.0, "pension.min_qualifying_service", "must be > 0",
            num(p.min_qualifying_service));
  c.require(p.commutation_numerator >= 0, "pension.commutation_numerator", "must be >= 0",
            std::to_string(p.commutation_numerator));
  c.require(p.commutation_denominator > 0, "pension.commutation_denominator", "must be > 0",
            std::to_string(p.commutation_denominator));
  if (p.commutation_denominator > 0) {
    c.require(p.commutation_numerator <= p.commutation_denominator,
              "pension.commutation_numerator", "commutation must be a fraction in [0, 1]",
              std::to_string(p.commutation_numerator) + "/" +
                  std::to_string(p.commutation_denominator));
  }
  c.require(p.gratuity_factor > 0.0 && std::isfinite(p.gratuity_factor),
            "pension.gratuity_factor", "must be > 0", num(p.gratuity_factor));
  std::set<std::string> labels;
  for (std::size_t i = 0; i < p.increases.size(); ++i) {
    const auto& inc = p.increases[i];
    const std::string path = "pension.increases[" + std::to_string(i) + "]";
    c.require(!inc.label.empty(), path + ".label", "must be non-empty", "\"\"");
    c.require(inc.label.empty() || labels.insert(inc.label).second, path + ".label",
              "must be unique", inc.label);
    c.require(in_unit_interval(inc.fraction), path + ".fraction", "must be in [0, 1]",
              num(inc.fraction));
  }
  c.require(in_unit_interval(p.medical_allowance_fraction), "pension.medical_allowance_fraction",
            "must be in [0, 1]", num(p.medical_allowance_fraction));
  c.require(p.superannuation_age > 0, "pension.superannuation_age", "must be > 0",
            std::to_string(p.superannuation_age));

  const auto& z = r.zakat;
  c.require(z.gold_nisab_weight > 0.0 && std::isfinite(z.gold_nisab_weight),
            "zakat.gold_nisab_weight", "must be > 0", num(z.gold_nisab_weight));
  c.require(z.silver_nisab_weight > 0.0 && std::isfinite(z.silver_nisab_weight),
            "zakat.silver_nisab_weight", "must be > 0", num(z.silver_nisab_weight));
  c.require(z.zakat_rate > 0.0 && z.zakat_rate < 1.0, "zakat.zakat_rate",
            "must be in (0, 1)", num(z.zakat_rate));
  return c.take();
}

RuleSet load_ruleset(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed rule-set document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("rule-set document must be a JSON object");
  reject_unknown_keys(doc, "", {"id", "currency", "tax", "pension", "zakat"});

  RuleSet r;
  if (!doc.contains("id")) throw ParseError("missing required key 'id'", "id");
  r.id = read_string(doc["id"], "id");
  read_optional(doc, "currency", "", r.currency,
                [](const json& v, const std::string&) { return read_string(v, "currency"); });
  r.tax = read_tax(require_object(doc, "tax", "tax"));
  if (doc.contains("pension")) r.pension = read_pension(require_object(doc, "pension", "pension"));
  if (doc.contains("zakat")) r.zakat = read_zakat(require_object(doc, "zakat", "zakat"));

  if (auto violations = validate_ruleset(r); !violations.empty()) {
    const auto& v = violations.front();
    throw ValidationError(v.field + " " + v.rule + " (got " + v.value + ")", v.field);
  }
  return r;
}

RuleSet load_ruleset_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::filesystem::filesystem_error(
        "cannot open rule-set file", path,
        std::make_error_code(std::errc::no_such_file_or_directory));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_ruleset(buf.str());
}

std::string serialize_ruleset(const RuleSet& r) {
  ordered_json brackets = ordered_json::array();
  for (const auto& b : r.tax.brackets) {
    brackets.push_back({{"lower_bound", b.lower_bound},
                        {"base_tax", b.base_tax},
                        {"marginal_rate", b.marginal_rate}});
  }
  ordered_json increases = ordered_json::array();
  for (const auto& inc : r.pension.increases) {
    increases.push_back({{"label", inc.label}, {"fraction", inc.fraction}});
  }
  const auto& p = r.pension;
  ordered_json doc = {
      {"id", r.id},
      {"currency", r.currency},
      {"tax",
       {{"brackets", brackets},
        {"teacher_rebate_fraction", r.tax.teacher_rebate_fraction},
        {"months_per_year", r.tax.months_per_year}}},
      {"pension",
       {{"gross_factor_numerator", p.gross_factor_numerator},
        {"gross_factor_denominator", p.gross_factor_denominator},
        {"max_creditable_service", p.max_creditable_service},
        {"min_qualifying_service", p.min_qualifying_service},
        {"commutation_numerator", p.commutation_numerator},
        {"commutation_denominator", p.commutation_denominator},
        {"gratuity_factor", p.gratuity_factor},
        {"increases", increases},
        {"medical_allowance_fraction", p.medical_allowance_fraction},
        {"superannuation_age", p.superannuation_age}}},
      {"zakat",
       {{"gold_nisab_weight", r.zakat.gold_nisab_weight},
        {"silver_nisab_weight", r.zakat.silver_nisab_weight},
        {"zakat_rate", r.zakat.zakat_rate}}},
  };
  return doc.dump(2) + "\n";
}

const RuleSet& default_ruleset() {
  static const RuleSet ruleset = [] {
    RuleSet r;
    r.id = std::string(kDefaultRuleSetId);
    r.currency = "PKR";
    // Salaried-person schedule for tax year 2014-15.
    r.tax.brackets = {
        {0, 0, 0.0},
        {400'000, 0, 0.05},
        {750'000, 17'500, 0.10},
        {1'400'000, 82'500, 0.125},
        {1'500'000, 95'000, 0.15},
        {1'800'000, 140'000, 0.175},
        {2'500'000, 262'500, 0.20},
        {3'000'000, 362'500, 0.225},
        {3'500'000, 475'000, 0.25},
        {4'000'000, 600'000, 0.275},
        {7'000'000, 1'425'000, 0.30},
    };
    return r;
  }();
  return ruleset;
}

}  // namespace finstudio
