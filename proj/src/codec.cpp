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

#include "finstudio/codec.hpp"

#include <initializer_list>
#include <span>
#include <vector>

#include "finstudio/numeric.hpp"

namespace finstudio::codec {

namespace {

std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

std::string type_name(const Json& j) { return j.type_name(); }

// Typed view over a JSON object that reports problems as SchemaViolation
// with the full field path.
class Object {
 public:
  Object(const Json& json, std::string path) : json_(json), path_(std::move(path)) {
    if (!json_.is_object()) {
      throw SchemaViolation((path_.empty() ? std::string("body") : "'" + path_ + "'") +
                                " must be an object, got " + type_name(json_),
                            path_);
    }
  }

  void allow_only(std::initializer_list<std::string_view> keys) const {
    allow_only(std::span<const std::string_view>(keys.begin(), keys.size()));
  }

  void allow_only(std::span<const std::string_view> keys) const {
    for (const auto& [key, _] : json_.items()) {
      bool known = false;
      for (auto k : keys) known = known || key == k;
      if (!known) throw SchemaViolation("unknown field '" + join(path_, key) + "'", join(path_, key));
    }
  }

  const Json* find(std::string_view key) const {
    auto it = json_.find(std::string(key));
    if (it == json_.end() || it->is_null()) return nullptr;
    return &*it;
  }

  const Json& require(std::string_view key) const {
    if (const Json* v = find(key)) return *v;
    throw SchemaViolation("missing required field '" + join(path_, key) + "'", join(path_, key));
  }

  double number(std::string_view key) const { return as_number(require(key), key); }

  std::optional<double> opt_number(std::string_view key) const {
    if (const Json* v = find(key)) return as_number(*v, key);
    return std::nullopt;
  }

  double number_or(std::string_view key, double fallback) const {
    return opt_number(key).value_or(fallback);
  }

  std::optional<int> opt_integer(std::string_view key) const {
    const Json* v = find(key);
    if (v == nullptr) return std::nullopt;
    if (!v->is_number_integer()) mistyped(key, "an integer", *v);
    return v->get<int>();
  }

  std::string string_or_empty(std::string_view key) const {
    const Json* v = find(key);
    if (v == nullptr) return {};
    if (!v->is_string()) mistyped(key, "a string", *v);
    return v->get<std::string>();
  }

  std::string string(std::string_view key) const {
    const Json& v = require(key);
    if (!v.is_string()) mistyped(key, "a string", v);
    return v.get<std::string>();
  }

  bool boolean_or(std::string_view key, bool fallback) const {
    const Json* v = find(key);
    if (v == nullptr) return fallback;
    if (!v->is_boolean()) mistyped(key, "a boolean", *v);
    return v->get<bool>();
  }

  std::optional<Date> opt_date(std::string_view key) const {
    const Json* v = find(key);
    if (v == nullptr) return std::nullopt;
    if (!v->is_string()) mistyped(key, "a date string", *v);
    auto date = parse_date(v->get<std::string>());
    if (!date) {
      throw SchemaViolation("'" + join(path_, key) + "' must be a YYYY-MM-DD date",
                            join(path_, key));
    }
    return date;
  }

  std::optional<Object> opt_object(std::string_view key) const {
    if (const Json* v = find(key)) return Object(*v, join(path_, key));
    return std::nullopt;
  }

  Object object(std::string_view key) const { return Object(require(key), join(path_, key)); }

  const Json& array(std::string_view key) const {
    const Json& v = require(key);
    if (!v.is_array()) mistyped(key, "an array", v);
    return v;
  }

  std::string path(std::string_view key) const { return join(path_, key); }

 private:
  double as_number(const Json& v, std::string_view key) const {
    if (!v.is_number()) mistyped(key, "a number", v);
    return v.get<double>();
  }

  [[noreturn]] void mistyped(std::string_view key, const char* expected, const Json& v) const {
    throw SchemaViolation("'" + join(path_, key) + "' must be " + expected + ", got " +
                              type_name(v),
                          join(path_, key));
  }

  const Json& json_;
  std::string path_;
};

Json date_or_null(const std::optional<Date>& d) {
  return d ? Json(format_date(*d)) : Json(nullptr);
}

MetalHolding decode_metal(const Object& o) {
  o.allow_only({"weight_tola", "price_per_tola"});
  return {o.number("weight_tola"), o.number("price_per_tola")};
}

template <typename Holdings>
void decode_items(const Object& parent, std::span<const LineItem<Holdings>> items,
                  Holdings& out) {
  auto obj = parent.opt_object("items");
  if (!obj) return;
  std::vector<std::string_view> keys;
  for (const auto& item : items) keys.push_back(item.key);
  obj->allow_only(keys);
  for (const auto& item : items) out.*item.member = obj->number_or(item.key, 0.0);
}

template <typename Holdings>
Json encode_items(std::span<const LineItem<Holdings>> items, const Holdings& h) {
  Json out = Json::object();
  for (const auto& item : items) out[std::string(item.key)] = h.*item.member;
  return out;
}

// Loan fields arrive as numbers or as form text.
double loan_field(const Object& o, std::string_view key, LoanField field) {
  const Json& v = o.require(key);
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    if (auto value = parse_number(v.get<std::string>())) return *value;
  }
  throw loan_entry_error(field);
}

Json encode_taxpayer(const TaxpayerDetails& d) {
  return {{"name", d.name},
          {"cnic", d.cnic},
          {"ntn", d.ntn},
          {"designation", d.designation},
          {"posting_city", d.posting_city},
          {"employer_ntn", d.employer_ntn},
          {"tax_year", d.tax_year},
          {"assessment_date", date_or_null(d.assessment_date)}};
}

TaxpayerDetails decode_taxpayer(const Object& o) {
  TaxpayerDetails d;
  d.name = o.string_or_empty("name");
  d.cnic = o.string_or_empty("cnic");
  d.ntn = o.string_or_empty("ntn");
  d.designation = o.string_or_empty("designation");
  d.posting_city = o.string_or_empty("posting_city");
  d.employer_ntn = o.string_or_empty("employer_ntn");
  d.tax_year = o.string_or_empty("tax_year");
  d.assessment_date = o.opt_date("assessment_date");
  return d;
}

Json encode_pensioner(const PensionerDetails& d) {
  return {{"pensioner_name", d.pensioner_name},
          {"date_of_birth", date_or_null(d.date_of_birth)},
          {"date_of_appointment", date_or_null(d.date_of_appointment)},
          {"date_of_retirement", date_or_null(d.date_of_retirement)},
          {"bps", d.bps ? Json(*d.bps) : Json(nullptr)}};
}

PensionerDetails decode_pensioner(const Object& o) {
  PensionerDetails d;
  d.pensioner_name = o.string_or_empty("pensioner_name");
  d.date_of_birth = o.opt_date("date_of_birth");
  d.date_of_appointment = o.opt_date("date_of_appointment");
  d.date_of_retirement = o.opt_date("date_of_retirement");
  d.bps = o.opt_integer("bps");
  return d;
}

}  // namespace

std::optional<std::string> requested_ruleset(const Json& body) {
  if (!body.is_object()) return std::nullopt;
  auto it = body.find("ruleset_id");
  if (it == body.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw SchemaViolation("'ruleset_id' must be a string", "ruleset_id");
  return it->get<std::string>();
}

// --- requests ---------------------------------------------------------------

TaxProfile decode_tax_profile(const Json& body) {
  Object o(body, "");
  o.allow_only({"ruleset_id", "name", "cnic", "ntn", "designation", "posting_city",
                "employer_ntn", "tax_year", "assessment_date", "monthly_income", "is_teacher",
                "already_paid"});
  TaxProfile p;
  p.details = decode_taxpayer(o);
  p.monthly_income = o.number("monthly_income");
  p.is_teacher = o.boolean_or("is_teacher", false);
  if (auto paid = o.opt_object("already_paid")) {
    paid->allow_only({"electricity", "telephone", "mobile", "others"});
    p.already_paid = AlreadyPaidTaxes{paid->number_or("electricity", 0.0),
                                      paid->number_or("telephone", 0.0),
                                      paid->number_or("mobile", 0.0),
                                      paid->number_or("others", 0.0)};
  }
  return p;
}

Json encode(const TaxProfile& p) {
  Json out = encode_taxpayer(p.details);
  out["monthly_income"] = p.monthly_income;
  out["is_teacher"] = p.is_teacher;
  if (p.already_paid) {
    out["already_paid"] = {{"electricity", p.already_paid->electricity},
                           {"telephone", p.already_paid->telephone},
                           {"mobile", p.already_paid->mobile},
                           {"others", p.already_paid->others}};
  }
  return out;
}

PensionInput decode_pension_input(const Json& body) {
  Object o(body, "");
  o.allow_only({"ruleset_id", "pensioner_name", "date_of_birth", "date_of_appointment",
                "date_of_retirement", "bps", "last_basic_pay", "qualifying_service"});
  PensionInput in;
  in.details = decode_pensioner(o);
  in.last_basic_pay = o.number("last_basic_pay");
  in.qualifying_service = o.number("qualifying_service");
  return in;
}

Json encode(const PensionInput& in) {
  Json out = encode_pensioner(in.details);
  out["last_basic_pay"] = in.last_basic_pay;
  out["qualifying_service"] = in.qualifying_service;
  return out;
}

ZakatDeclaration decode_zakat_declaration(const Json& body) {
  Object o(body, "");
  o.allow_only({"ruleset_id", "gold", "silver", "cash", "business", "property"});
  ZakatDeclaration d;
  if (auto gold = o.opt_object("gold")) d.gold = decode_metal(*gold);
  if (auto silver = o.opt_object("silver")) d.silver = decode_metal(*silver);
  if (auto cash = o.opt_object("cash")) {
    cash->allow_only({"items", "nisab_amount"});
    CashHoldings h;
    decode_items(*cash, cash_line_items(), h);
    h.nisab_amount = cash->number("nisab_amount");
    d.cash = h;
  }
  if (auto business = o.opt_object("business")) {
    business->allow_only({"items", "nisab_amount"});
    BusinessHoldings h;
    decode_items(*business, business_line_items(), h);
    h.nisab_amount = business->number("nisab_amount");
    d.business = h;
  }
  if (auto property = o.opt_object("property")) {
    property->allow_only({"net_property", "other_property", "nisab_amount"});
    d.property = PropertyHoldings{property->number_or("net_property", 0.0),
                                  property->number_or("other_property", 0.0),
                                  property->number("nisab_amount")};
  }
  return d;
}

Json encode(const ZakatDeclaration& d) {
  Json out = Json::object();
  auto metal = [](const MetalHolding& m) {
    return Json{{"weight_tola", m.weight_tola}, {"price_per_tola", m.price_per_tola}};
  };
  if (d.gold) out["gold"] = metal(*d.gold);
  if (d.silver) out["silver"] = metal(*d.silver);
  if (d.cash) {
    out["cash"] = {{"items", encode_items(cash_line_items(), *d.cash)},
                   {"nisab_amount", d.cash->nisab_amount}};
  }
  if (d.business) {
    out["business"] = {{"items", encode_items(business_line_items(), *d.business)},
                       {"nisab_amount", d.business->nisab_amount}};
  }
  if (d.property) {
    out["property"] = {{"net_property", d.property->net_property},
                       {"other_property", d.property->other_property},
                       {"nisab_amount", d.property->nisab_amount}};
  }
  return out;
}

LoanInput decode_loan_input(const Json& body) {
  Object o(body, "");
  o.allow_only({"amount", "annual_rate_percent", "periods"});
  LoanInput in;
  in.amount = loan_field(o, "amount", LoanField::amount);
  in.annual_rate_percent = loan_field(o, "annual_rate_percent", LoanField::annual_rate_percent);
  in.periods = loan_field(o, "periods", LoanField::periods);
  return in;
}

Json encode(const LoanInput& in) {
  return {{"amount", in.amount},
          {"annual_rate_percent", in.annual_rate_percent},
          {"periods", in.periods}};
}

CodedResponses decode_coded_responses(const Json& body) {
  Object o(body, "");
  o.allow_only({"counts"});
  const Json& arr = o.array("counts");
  std::vector<ChoiceCount> counts;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    Object entry(arr[i], "counts[" + std::to_string(i) + "]");
    entry.allow_only({"code", "count"});
    const Json& code = entry.require("code");
    const Json& count = entry.require("count");
    if (!code.is_number_integer()) {
      throw SchemaViolation("'" + entry.path("code") + "' must be an integer", entry.path("code"));
    }
    if (!count.is_number_unsigned()) {
      throw SchemaViolation("'" + entry.path("count") + "' must be a non-negative integer",
                            entry.path("count"));
    }
    counts.push_back({code.get<std::int64_t>(), count.get<std::uint64_t>()});
  }
  return CodedResponses::from_counts(std::move(counts));
}

Json encode(const CodedResponses& r) {
  Json arr = Json::array();
  for (const auto& c : r.counts()) arr.push_back({{"code", c.code}, {"count", c.count}});
  return {{"counts", arr}};
}

// --- results ----------------------------------------------------------------

Json encode(const TaxAssessment& a) {
  return {
      {"ruleset_id", a.ruleset_id},
      {"taxpayer", encode_taxpayer(a.details)},
      {"annual_salary", a.annual_salary},
      {"take_home_monthly", a.take_home_monthly},
      {"gross_annual_tax", a.gross_annual_tax},
      {"teacher_exemption", a.teacher_exemption},
      {"net_tax_after_exemption", a.net_tax_after_exemption},
      {"total_already_paid", a.total_already_paid},
      {"annual_tax_payable", a.annual_tax_payable},
      {"overpaid", a.overpaid},
      {"display",
       {{"annual_salary", format_amount(a.annual_salary)},
        {"take_home_monthly", format_amount(a.take_home_monthly)},
        {"gross_annual_tax", format_amount(a.gross_annual_tax)},
        {"teacher_exemption", format_amount(a.teacher_exemption)},
        {"net_tax_after_exemption", format_amount(a.net_tax_after_exemption)},
        {"total_already_paid", format_amount(a.total_already_paid)},
        {"annual_tax_payable", format_amount(a.annual_tax_payable)}}},
  };
}

TaxAssessment decode_tax_assessment(const Json& doc) {
  Object o(doc, "");
  TaxAssessment a;
  a.ruleset_id = o.string("ruleset_id");
  a.details = decode_taxpayer(o.object("taxpayer"));
  a.annual_salary = o.number("annual_salary");
  a.take_home_monthly = o.number("take_home_monthly");
  a.gross_annual_tax = o.number("gross_annual_tax");
  a.teacher_exemption = o.number("teacher_exemption");
  a.net_tax_after_exemption = o.number("net_tax_after_exemption");
  a.total_already_paid = o.number("total_already_paid");
  a.annual_tax_payable = o.number("annual_tax_payable");
  a.overpaid = o.boolean_or("overpaid", false);
  return a;
}

Json encode(const PensionAward& a) {
  Json increases = Json::array();
  Json increases_display = Json::array();
  for (const auto& inc : a.increases) {
    increases.push_back({{"label", inc.label}, {"amount", inc.amount}});
    increases_display.push_back({{"label", inc.label}, {"amount", format_amount(inc.amount)}});
  }
  return {
      {"ruleset_id", a.ruleset_id},
      {"pensioner", encode_pensioner(a.details)},
      {"creditable_service", a.creditable_service},
      {"gross_pension", a.gross_pension},
      {"commuted_portion", a.commuted_portion},
      {"net_pension", a.net_pension},
      {"total_gratuity", a.total_gratuity},
      {"increases", increases},
      {"medical_allowance", a.medical_allowance},
      {"total_pension_per_month", a.total_pension_per_month},
      {"advisories", a.advisories},
      {"display",
       {{"creditable_service", format_amount(a.creditable_service)},
        {"gross_pension", format_amount(a.gross_pension)},
        {"commuted_portion", format_amount(a.commuted_portion)},
        {"net_pension", format_amount(a.net_pension)},
        {"total_gratuity", format_amount(a.total_gratuity)},
        {"increases", increases_display},
        {"medical_allowance", format_amount(a.medical_allowance)},
        {"total_pension_per_month", format_amount(a.total_pension_per_month)}}},
  };
}

PensionAward decode_pension_award(const Json& doc) {
  Object o(doc, "");
  PensionAward a;
  a.ruleset_id = o.string("ruleset_id");
  a.details = decode_pensioner(o.object("pensioner"));
  a.creditable_service = o.number("creditable_service");
  a.gross_pension = o.number("gross_pension");
  a.commuted_portion = o.number("commuted_portion");
  a.net_pension = o.number("net_pension");
  a.total_gratuity = o.number("total_gratuity");
  const Json& increases = o.array("increases");
  for (std::size_t i = 0; i < increases.size(); ++i) {
    Object inc(increases[i], "increases[" + std::to_string(i) + "]");
    a.increases.push_back({inc.string("label"), inc.number("amount")});
  }
  a.medical_allowance = o.number("medical_allowance");
  a.total_pension_per_month = o.number("total_pension_per_month");
  if (o.find("advisories") != nullptr) {
    for (const auto& adv : o.array("advisories")) {
      if (!adv.is_string()) throw SchemaViolation("'advisories' must hold strings", "advisories");
      a.advisories.push_back(adv.get<std::string>());
    }
  }
  return a;
}

Json encode(const ZakatAssessment& a) {
  Json counted = Json::object();
  Json counted_display = Json::object();
  for (auto c : kZakatCategories) {
    counted[std::string(to_string(c))] = a.counted_value(c);
    counted_display[std::string(to_string(c))] = format_amount(a.counted_value(c));
  }
  Json notices = Json::array();
  for (const auto& n : a.notices) {
    notices.push_back({{"category", to_string(n.category)}, {"message", n.message}});
  }
  return {
      {"ruleset_id", a.ruleset_id},
      {"counted", counted},
      {"notices", notices},
      {"total_assets", a.total_assets},
      {"zakat_due", a.zakat_due},
      {"display",
       {{"counted", counted_display},
        {"total_assets", format_amount(a.total_assets)},
        {"zakat_due", format_amount(a.zakat_due)}}},
  };
}

ZakatAssessment decode_zakat_assessment(const Json& doc) {
  Object o(doc, "");
  ZakatAssessment a;
  a.ruleset_id = o.string("ruleset_id");
  Object counted = o.object("counted");
  for (auto c : kZakatCategories) {
    a.counted[static_cast<std::size_t>(c)] = counted.number(to_string(c));
  }
  const Json& notices = o.array("notices");
  for (std::size_t i = 0; i < notices.size(); ++i) {
    Object n(notices[i], "notices[" + std::to_string(i) + "]");
    auto category = zakat_category_from_string(n.string("category"));
    if (!category) {
      throw SchemaViolation("unknown zakat category", n.path("category"));
    }
    a.notices.push_back({*category, n.string("message")});
  }
  a.total_assets = o.number("total_assets");
  a.zakat_due = o.number("zakat_due");
  return a;
}

Json encode(const LoanSchedule& s) {
  return {{"monthly_payment", s.monthly_payment},
          {"yearly_payment", s.yearly_payment},
          {"display",
           {{"monthly_payment", format_amount(s.monthly_payment)},
            {"yearly_payment", format_amount(s.yearly_payment)}}}};
}

LoanSchedule decode_loan_schedule(const Json& doc) {
  Object o(doc, "");
  return {o.number("monthly_payment"), o.number("yearly_payment")};
}

Json encode(const SurveySummary& s) {
  return {{"minimum", s.minimum},
          {"maximum", s.maximum},
          {"median", s.median},
          {"mean", s.mean},
          {"std_dev", s.std_dev},
          {"display",
           {{"minimum", format_amount(s.minimum)},
            {"maximum", format_amount(s.maximum)},
            {"median", format_amount(s.median)},
            {"mean", format_amount(s.mean)},
            {"std_dev", format_amount(s.std_dev)}}}};
}

SurveySummary decode_survey_summary(const Json& doc) {
  Object o(doc, "");
  return {o.number("minimum"), o.number("maximum"), o.number("median"), o.number("mean"),
          o.number("std_dev")};
}

Json encode_error(const Error& e) {
  Json err = {{"code", to_string(e.code())}, {"message", e.what()}, {"field", e.field()}};
  if (!e.title().empty()) err["title"] = e.title();
  return {{"error", err}};
}

}  // namespace finstudio::codec
