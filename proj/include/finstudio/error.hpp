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

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace finstudio {

/// Machine-readable error codes. This is the closed set carried by the
/// service's ApiError payload and the CLI's diagnostics.
enum class ErrorCode {
  parse_error,
  validation_error,
  invalid_input,
  service_too_short,
  no_categories,
  not_a_number,
  empty_input,
  schema_violation,
  unknown_ruleset,
  not_found,
  internal_error,
};

/// Wire name of an error code, e.g. "service_too_short".
std::string_view to_string(ErrorCode code);

/// All codes, in declaration order.
std::span<const ErrorCode> all_error_codes();

/// Base of every error raised by the engines and loaders.
///
/// `field` is the offending input path (e.g. "tax.brackets[1].base_tax"),
/// empty when the error is not tied to one field. `title` carries the
/// dialog title for messages that have one (pension and loan entry errors).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string field = {},
        std::string title = {})
      : std::runtime_error(std::move(message)),
        code_(code),
        field_(std::move(field)),
        title_(std::move(title)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& field() const noexcept { return field_; }
  const std::string& title() const noexcept { return title_; }

 private:
  ErrorCode code_;
  std::string field_;
  std::string title_;
};

#define FINSTUDIO_DEFINE_ERROR(Name, Code)                                 \
  class Name : public Error {                                              \
   public:                                                                 \
    explicit Name(std::string message, std::string field = {},             \
                  std::string title = {})                                  \
        : Error(ErrorCode::Code, std::move(message), std::move(field),     \
                std::move(title)) {}                                       \
  }

FINSTUDIO_DEFINE_ERROR(ParseError, parse_error);
FINSTUDIO_DEFINE_ERROR(ValidationError, validation_error);
FINSTUDIO_DEFINE_ERROR(InvalidInput, invalid_input);
FINSTUDIO_DEFINE_ERROR(ServiceTooShort, service_too_short);
FINSTUDIO_DEFINE_ERROR(NoCategories, no_categories);
FINSTUDIO_DEFINE_ERROR(NotANumber, not_a_number);
FINSTUDIO_DEFINE_ERROR(EmptyInput, empty_input);
FINSTUDIO_DEFINE_ERROR(SchemaViolation, schema_violation);
FINSTUDIO_DEFINE_ERROR(UnknownRuleSet, unknown_ruleset);
FINSTUDIO_DEFINE_ERROR(NotFound, not_found);
FINSTUDIO_DEFINE_ERROR(InternalError, internal_error);

#undef FINSTUDIO_DEFINE_ERROR

}  // namespace finstudio
