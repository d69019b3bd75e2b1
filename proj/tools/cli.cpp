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

#include <pthread.h>
#include <signal.h>

#include <filesystem>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <thread>

#include <CLI11.hpp>

#include "finstudio/codec.hpp"
#include "finstudio/error.hpp"
#include "finstudio/numeric.hpp"
#include "finstudio/registry.hpp"
#include "finstudio/service.hpp"

namespace finstudio::cli {

namespace {

namespace fs = std::filesystem;

// --- flag helpers -------------------------------------------------------------

double number_flag(const std::string& text, const std::string& flag) {
  if (auto value = parse_number(text)) return *value;
  throw NotANumber("Enter a number for " + flag, flag);
}

std::optional<Date> date_flag(const std::string& text, const std::string& flag) {
  if (text.empty()) return std::nullopt;
  if (auto date = parse_date(text)) return date;
  throw InvalidInput(flag + " must be a YYYY-MM-DD date", flag);
}

template <typename Holdings>
void apply_items(const std::vector<std::string>& specs, std::span<const LineItem<Holdings>> items,
                 const std::string& flag, Holdings& out) {
  std::set<std::string> seen;
  for (const auto& spec : specs) {
    const auto eq = spec.find('=');
    std::string key = spec.substr(0, eq);
    for (auto& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    const LineItem<Holdings>* match = nullptr;
    for (const auto& item : items) {
      if (item.key == key) match = &item;
    }
    if (eq == std::string::npos || match == nullptr) {
      std::string known;
      for (const auto& item : items) known += (known.empty() ? "" : ", ") + std::string(item.key);
      throw InvalidInput(flag + " expects ITEM=N with ITEM one of " + known + ", got '" + spec + "'",
                         flag);
    }
    if (!seen.insert(key).second) throw InvalidInput(flag + " item '" + key + "' given twice", flag);
    out.*match->member = number_flag(spec.substr(eq + 1), flag + " " + key);
  }
}

const RuleSet& pick_ruleset(const std::string& path, std::optional<RuleSet>& storage) {
  if (path.empty()) return default_ruleset();
  storage = load_ruleset_file(path);
  return *storage;
}

// --- text rendering -----------------------------------------------------------

void line(std::ostream& out, std::string_view label, double value) {
  out << label << ' ' << format_amount(value) << '\n';
}

void render(std::ostream& out, const TaxAssessment& a) {
  if (!a.details.name.empty()) out << "Name " << a.details.name << '\n';
  if (!a.details.cnic.empty()) out << "CNIC " << a.details.cnic << '\n';
  line(out, "Annual salary", a.annual_salary);
  line(out, "Take home salary", a.take_home_monthly);
  line(out, "Gross annual tax", a.gross_annual_tax);
  line(out, "Teacher exemption", a.teacher_exemption);
  line(out, "Net tax", a.net_tax_after_exemption);
  line(out, "Total already paid tax", a.total_already_paid);
  line(out, "Annual tax", a.annual_tax_payable);
  if (a.overpaid) out << "Overpaid yes\n";
}

void render(std::ostream& out, const PensionAward& a) {
  if (!a.details.pensioner_name.empty()) out << "Name " << a.details.pensioner_name << '\n';
  line(out, "Creditable service", a.creditable_service);
  line(out, "Gross pension", a.gross_pension);
  line(out, "Commuted portion", a.commuted_portion);
  line(out, "Net pension", a.net_pension);
  line(out, "Total Gratuity", a.total_gratuity);
  for (const auto& inc : a.increases) line(out, inc.label, inc.amount);
  line(out, "Medical allowance", a.medical_allowance);
  line(out, "Total pension per month", a.total_pension_per_month);
  for (const auto& adv : a.advisories) out << "Advisory " << adv << '\n';
}

void render(std::ostream& out, const ZakatAssessment& a) {
  line(out, "Gold", a.counted_value(ZakatCategory::gold));
  line(out, "Silver", a.counted_value(ZakatCategory::silver));
  line(out, "Cash", a.counted_value(ZakatCategory::cash));
  line(out, "Business", a.counted_value(ZakatCategory::business));
  line(out, "Property", a.counted_value(ZakatCategory::property));
  line(out, "Total assets", a.total_assets);
  line(out, "Zakat due", a.zakat_due);
  for (const auto& n : a.notices) out << "Notice " << n.message << '\n';
}

void render(std::ostream& out, const LoanSchedule& s) {
  line(out, "Monthly payment amount", s.monthly_payment);
  line(out, "Yearly payment amount", s.yearly_payment);
}

void render(std::ostream& out, const SurveySummary& s) {
  line(out, "Min", s.minimum);
  line(out, "Max", s.maximum);
  line(out, "Median", s.median);
  line(out, "Mean", s.mean);
  line(out, "StdDev", s.std_dev);
}

template <typename Result>
void emit(std::ostream& out, const std::string& format, const Result& result) {
  if (format == "json") {
    out << codec::encode(result).dump() << '\n';
  } else {
    render(out, result);
  }
}

// --- serve --------------------------------------------------------------------

int serve(const std::string& host, int port, const std::string& rules_dir,
          const std::string& static_dir, std::ostream& out) {
  auto registry = std::make_shared<const RuleSetRegistry>(
      rules_dir.empty() ? RuleSetRegistry::builtin() : RuleSetRegistry::load_directory(rules_dir));
  auto service = std::make_shared<const Service>(registry);

  ServerOptions options;
  options.host = host;
  options.port = port;
  if (!static_dir.empty()) {
    if (!fs::is_directory(static_dir)) {
      throw fs::filesystem_error("static directory not found", static_dir,
                                 std::make_error_code(std::errc::no_such_file_or_directory));
    }
    options.static_dir = static_dir;
  }

  // Block the stop signals before the server spawns workers so only the
  // waiter thread receives them.
  sigset_t stop_signals;
  sigemptyset(&stop_signals);
  sigaddset(&stop_signals, SIGINT);
  sigaddset(&stop_signals, SIGTERM);
  sigset_t previous;
  pthread_sigmask(SIG_BLOCK, &stop_signals, &previous);

  HttpServer server(service, options);
  int bound = 0;
  try {
    bound = server.bind();
  } catch (...) {
    pthread_sigmask(SIG_SETMASK, &previous, nullptr);
    throw;
  }
  out << "finstudio listening on " << host << ':' << bound << " (default rule-set "
      << registry->default_id() << ")" << std::endl;

  std::thread waiter([&] {
    int sig = 0;
    sigwait(&stop_signals, &sig);
    server.stop();
  });
  server.serve();
  waiter.join();
  pthread_sigmask(SIG_SETMASK, &previous, nullptr);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tax, pension, zakat and loan calculators with survey statistics", "finstudio"};
  app.require_subcommand(1, 1);

  const std::vector<std::string> formats{"text", "json"};
  std::string format = "text";
  std::string ruleset_path;

  // tax
  auto* tax = app.add_subcommand("tax", "Annual income tax for a salaried person");
  std::string monthly_income;
  bool teacher = false;
  std::string paid_electricity, paid_telephone, paid_mobile, paid_others;
  TaxpayerDetails taxpayer;
  std::string assessment_date;
  tax->add_option("--monthly-income", monthly_income, "Monthly income")->required();
  tax->add_flag("--teacher", teacher, "Apply the teacher exemption");
  auto* pe = tax->add_option("--paid-electricity", paid_electricity, "Tax already paid via electricity bills");
  auto* pt = tax->add_option("--paid-telephone", paid_telephone, "Tax already paid via telephone bills");
  auto* pm = tax->add_option("--paid-mobile", paid_mobile, "Tax already paid via mobile top-ups");
  auto* po = tax->add_option("--paid-others", paid_others, "Other tax already paid");
  tax->add_option("--name", taxpayer.name);
  tax->add_option("--cnic", taxpayer.cnic, "13-digit CNIC");
  tax->add_option("--ntn", taxpayer.ntn);
  tax->add_option("--designation", taxpayer.designation);
  tax->add_option("--posting-city", taxpayer.posting_city);
  tax->add_option("--employer-ntn", taxpayer.employer_ntn);
  tax->add_option("--tax-year", taxpayer.tax_year);
  tax->add_option("--assessment-date", assessment_date, "YYYY-MM-DD");

  // pension
  auto* pension = app.add_subcommand("pension", "Net pension, gratuity and increases");
  std::string last_basic_pay, qualifying_service;
  PensionerDetails pensioner;
  std::string birth, appointment, retirement;
  int bps = 0;
  pension->add_option("--last-basic-pay", last_basic_pay)->required();
  pension->add_option("--qualifying-service", qualifying_service, "Years")->required();
  pension->add_option("--name", pensioner.pensioner_name);
  pension->add_option("--date-of-birth", birth, "YYYY-MM-DD");
  pension->add_option("--date-of-appointment", appointment, "YYYY-MM-DD");
  pension->add_option("--date-of-retirement", retirement, "YYYY-MM-DD");
  auto* bps_opt = pension->add_option("--bps", bps, "Basic pay scale grade");

  // zakat
  auto* zakat = app.add_subcommand("zakat", "Zakat due on declared assets");
  std::string gold_tola, gold_price, silver_tola, silver_price;
  std::vector<std::string> cash_items, business_items;
  std::string cash_nisab, business_nisab, property_net, property_other, property_nisab;
  auto* gt = zakat->add_option("--gold-tola", gold_tola);
  auto* gp = zakat->add_option("--gold-price", gold_price, "Price per tola");
  auto* st = zakat->add_option("--silver-tola", silver_tola);
  auto* sp = zakat->add_option("--silver-price", silver_price, "Price per tola");
  auto* ci = zakat->add_option("--cash", cash_items, "ITEM=N, ITEM in chb bas sss myhl ocm");
  auto* cn = zakat->add_option("--cash-nisab", cash_nisab);
  auto* bi = zakat->add_option("--business", business_items, "ITEM=N, ITEM in bi pfi bs ofb");
  auto* bn = zakat->add_option("--business-nisab", business_nisab);
  auto* pn = zakat->add_option("--property-net", property_net);
  auto* pot = zakat->add_option("--property-other", property_other);
  auto* pni = zakat->add_option("--property-nisab", property_nisab);

  // loan
  auto* loan = app.add_subcommand("loan", "Monthly and yearly loan payments");
  std::string amount, rate, periods;
  loan->add_option("--amount", amount)->required();
  loan->add_option("--rate", rate, "Annual rate of interest in percent")->required();
  loan->add_option("--periods", periods, "Number of months/years")->required();

  // stats
  auto* stats = app.add_subcommand("stats", "Descriptive statistics of coded responses");
  std::string counts_list, counts_file;
  auto* cl = stats->add_option("--counts", counts_list, "CODE:COUNT[,CODE:COUNT...]");
  auto* cf = stats->add_option("--counts-file", counts_file, "File of CODE:COUNT lines");
  cl->excludes(cf);

  // serve
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP JSON service");
  int port = 8080;
  std::string host = "0.0.0.0", rules_dir, static_dir;
  serve_cmd->add_option("--port", port)->envname("FINSTUDIO_PORT")->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--host", host);
  serve_cmd->add_option("--rules", rules_dir, "Directory of *.rules.json files")
      ->envname("FINSTUDIO_RULES");
  serve_cmd->add_option("--static", static_dir, "Directory of web assets to serve at /");

  for (auto* sub : {tax, pension, zakat, loan, stats}) {
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember(formats));
  }
  for (auto* sub : {tax, pension, zakat}) {
    sub->add_option("--ruleset", ruleset_path, "Rule-set JSON file");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (stats->parsed() && cl->count() == 0 && cf->count() == 0) {
      throw CLI::RequiredError("--counts or --counts-file");
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "finstudio: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    std::optional<RuleSet> loaded;
    if (tax->parsed()) {
      TaxProfile profile;
      profile.details = taxpayer;
      profile.details.assessment_date = date_flag(assessment_date, "--assessment-date");
      profile.monthly_income = number_flag(monthly_income, "--monthly-income");
      profile.is_teacher = teacher;
      if (pe->count() + pt->count() + pm->count() + po->count() > 0) {
        AlreadyPaidTaxes paid;
        if (pe->count()) paid.electricity = number_flag(paid_electricity, "--paid-electricity");
        if (pt->count()) paid.telephone = number_flag(paid_telephone, "--paid-telephone");
        if (pm->count()) paid.mobile = number_flag(paid_mobile, "--paid-mobile");
        if (po->count()) paid.others = number_flag(paid_others, "--paid-others");
        profile.already_paid = paid;
      }
      emit(out, format, assess_tax(profile, pick_ruleset(ruleset_path, loaded)));
    } else if (pension->parsed()) {
      PensionInput input;
      input.details = pensioner;
      input.details.date_of_birth = date_flag(birth, "--date-of-birth");
      input.details.date_of_appointment = date_flag(appointment, "--date-of-appointment");
      input.details.date_of_retirement = date_flag(retirement, "--date-of-retirement");
      if (bps_opt->count()) input.details.bps = bps;
      input.last_basic_pay = number_flag(last_basic_pay, "--last-basic-pay");
      input.qualifying_service = number_flag(qualifying_service, "--qualifying-service");
      emit(out, format, compute_pension(input, pick_ruleset(ruleset_path, loaded)));
    } else if (zakat->parsed()) {
      ZakatDeclaration d;
      auto require = [](CLI::Option* opt, const char* flag, const char* category) {
        if (opt->count() == 0) {
          throw InvalidInput(std::string(flag) + " is required when " + category + " is declared",
                             flag);
        }
      };
      if (gt->count() || gp->count()) {
        require(gt, "--gold-tola", "gold");
        require(gp, "--gold-price", "gold");
        d.gold = MetalHolding{number_flag(gold_tola, "--gold-tola"),
                              number_flag(gold_price, "--gold-price")};
      }
      if (st->count() || sp->count()) {
        require(st, "--silver-tola", "silver");
        require(sp, "--silver-price", "silver");
        d.silver = MetalHolding{number_flag(silver_tola, "--silver-tola"),
                                number_flag(silver_price, "--silver-price")};
      }
      if (ci->count() || cn->count()) {
        require(cn, "--cash-nisab", "cash");
        CashHoldings cash;
        apply_items(cash_items, cash_line_items(), "--cash", cash);
        cash.nisab_amount = number_flag(cash_nisab, "--cash-nisab");
        d.cash = cash;
      }
      if (bi->count() || bn->count()) {
        require(bn, "--business-nisab", "business");
        BusinessHoldings business;
        apply_items(business_items, business_line_items(), "--business", business);
        business.nisab_amount = number_flag(business_nisab, "--business-nisab");
        d.business = business;
      }
      if (pn->count() || pot->count() || pni->count()) {
        require(pni, "--property-nisab", "property");
        PropertyHoldings property;
        if (pn->count()) property.net_property = number_flag(property_net, "--property-net");
        if (pot->count()) property.other_property = number_flag(property_other, "--property-other");
        property.nisab_amount = number_flag(property_nisab, "--property-nisab");
        d.property = property;
      }
      emit(out, format, assess_zakat(d, pick_ruleset(ruleset_path, loaded)));
    } else if (loan->parsed()) {
      emit(out, format, compute_loan(parse_loan_input(amount, rate, periods)));
    } else if (stats->parsed()) {
      const CodedResponses responses =
          cf->count() ? load_counts_file(counts_file) : parse_counts_list(counts_list);
      emit(out, format, summarize(responses));
    } else if (serve_cmd->parsed()) {
      return serve(host, port, rules_dir, static_dir, out);
    }
  } catch (const Error& e) {
    err << "finstudio: ";
    if (!e.title().empty()) err << e.title() << ": ";
    err << e.what() << '\n';
    return kExitValidation;
  } catch (const fs::filesystem_error& e) {
    err << "finstudio: " << e.what() << '\n';
    return kExitNoInput;
  } catch (const std::exception& e) {
    err << "finstudio: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}

}  // namespace finstudio::cli
