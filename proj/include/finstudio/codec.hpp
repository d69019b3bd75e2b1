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

#include <optional>
#include <string>

#include <json.hpp>

#include "finstudio/error.hpp"
#include "finstudio/loan.hpp"
#include "finstudio/pension.hpp"
#include "finstudio/stats.hpp"
#include "finstudio/tax.hpp"
#include "finstudio/zakat.hpp"

// Wire format shared by the HTTP service and `finstudio --format json`.
//
// Results carry raw numbers at full precision plus a `display` object with
// the 2-decimal strings a UI shows, so nothing downstream re-rounds.
// Request decoders raise SchemaViolation for missing, mistyped or unknown
// keys; engine-level checks are left to the engines.

namespace finstudio::codec {

using Json = nlohmann::ordered_json;

/// `ruleset_id` of a request body, if present. Throws SchemaViolation when
/// it is not a string.
std::optional<std::string> requested_ruleset(const Json& body);

TaxProfile decode_tax_profile(const Json& body);
PensionInput decode_pension_input(const Json& body);
ZakatDeclaration decode_zakat_declaration(const Json& body);
/// Loan fields may be numbers or numeric strings; anything else raises
/// NotANumber with the entry-error text.
LoanInput decode_loan_input(const Json& body);
CodedResponses decode_coded_responses(const Json& body);

Json encode(const TaxProfile& profile);
Json encode(const PensionInput& input);
Json encode(const ZakatDeclaration& declaration);
Json encode(const LoanInput& input);
Json encode(const CodedResponses& responses);

Json encode(const TaxAssessment& assessment);
Json encode(const PensionAward& award);
Json encode(const ZakatAssessment& assessment);
Json encode(const LoanSchedule& schedule);
Json encode(const SurveySummary& summary);

TaxAssessment decode_tax_assessment(const Json& doc);
PensionAward decode_pension_award(const Json& doc);
ZakatAssessment decode_zakat_assessment(const Json& doc);
LoanSchedule decode_loan_schedule(const Json& doc);
SurveySummary decode_survey_summary(const Json& doc);

/// {"error": {"code", "message", "field", "title"?}}
Json encode_error(const Error& error);

}  // namespace finstudio::codec
