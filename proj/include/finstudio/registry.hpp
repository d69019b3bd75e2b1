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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finstudio/rules.hpp"

namespace finstudio {

/// Read-only set of rule-sets keyed by id, with one default.
class RuleSetRegistry {
 public:
  /// Throws ValidationError on an empty list or duplicate ids.
  explicit RuleSetRegistry(std::vector<RuleSet> rulesets);

  /// Registry holding only the built-in default rule-set.
  static RuleSetRegistry builtin();

  /// Loads every `*.rules.json` in `dir`. Throws filesystem_error when the
  /// directory is missing, ParseError/ValidationError for a bad file
  /// (message prefixed with the file name).
  static RuleSetRegistry load_directory(const std::filesystem::path& dir);

  /// `id`, or the default when absent. Throws UnknownRuleSet.
  const RuleSet& get(std::optional<std::string_view> id = std::nullopt) const;

  const std::string& default_id() const { return default_id_; }

  /// All rule-sets ordered by id.
  std::vector<const RuleSet*> all() const;

 private:
  std::map<std::string, RuleSet, std::less<>> by_id_;
  std::string default_id_;
};

}  // namespace finstudio
