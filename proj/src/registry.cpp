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

#include "finstudio/registry.hpp"

#include <algorithm>
#include <system_error>

#include "finstudio/error.hpp"

namespace finstudio {

namespace fs = std::filesystem;

RuleSetRegistry::RuleSetRegistry(std::vector<RuleSet> rulesets) {
  if (rulesets.empty()) throw ValidationError("a registry needs at least one rule-set");
  for (auto& r : rulesets) {
    std::string id = r.id;
    if (!by_id_.emplace(id, std::move(r)).second) {
      throw ValidationError("duplicate rule-set id '" + id + "'", "id");
    }
  }
  default_id_ = by_id_.contains(kDefaultRuleSetId) ? std::string(kDefaultRuleSetId)
                                                   : by_id_.begin()->first;
}

RuleSetRegistry RuleSetRegistry::builtin() { return RuleSetRegistry({default_ruleset()}); }

RuleSetRegistry RuleSetRegistry::load_directory(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    throw fs::filesystem_error("rules directory not found", dir,
                               std::make_error_code(std::errc::no_such_file_or_directory));
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && name.ends_with(".rules.json")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<RuleSet> rulesets;
  for (const auto& file : files) {
    try {
      rulesets.push_back(load_ruleset_file(file));
    } catch (const Error& e) {
      throw Error(e.code(), file.filename().string() + ": " + e.what(), e.field());
    }
  }
  if (rulesets.empty()) {
    throw ValidationError("no *.rules.json files in " + dir.string());
  }
  return RuleSetRegistry(std::move(rulesets));
}

const RuleSet& RuleSetRegistry::get(std::optional<std::string_view> id) const {
  const std::string_view key = id.value_or(default_id_);
  auto it = by_id_.find(key);
  if (it == by_id_.end()) {
    throw UnknownRuleSet("unknown rule-set id '" + std::string(key) + "'", "ruleset_id");
  }
  return it->second;
}

std::vector<const RuleSet*> RuleSetRegistry::all() const {
  std::vector<const RuleSet*> out;
  for (const auto& [_, r] : by_id_) out.push_back(&r);
  return out;
}

}  // namespace finstudio
