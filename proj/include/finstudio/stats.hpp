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

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <utility>
#include <vector>

namespace finstudio {

struct ChoiceCount {
  std::int64_t code = 0;   ///< positive answer-choice number
  std::uint64_t count = 0;

  friend bool operator==(const ChoiceCount&, const ChoiceCount&) = default;
};

/// Response counts per answer choice, codes strictly increasing.
class CodedResponses {
 public:
  /// Sorts by code and merges repeated codes. Throws InvalidInput for a
  /// code below 1.
  static CodedResponses from_counts(std::vector<ChoiceCount> counts);

  const std::vector<ChoiceCount>& counts() const { return counts_; }
  std::uint64_t total() const;

  friend bool operator==(const CodedResponses&, const CodedResponses&) = default;

 private:
  std::vector<ChoiceCount> counts_;
};

struct SurveySummary {
  double minimum = 0.0;
  double maximum = 0.0;
  double median = 0.0;
  double mean = 0.0;
  double std_dev = 0.0;  ///< population (divides by n)

  friend bool operator==(const SurveySummary&, const SurveySummary&) = default;
};

/// Five-number summary over the expanded multiset of codes. The median
/// averages the two middle values when n is even.
///
/// Throws EmptyInput when no response has a nonzero count.
SurveySummary summarize(const CodedResponses& responses);

/// Parses the fixture format: one `code:count` pair per line. Blank lines
/// and lines starting with '#' are skipped. Throws ParseError naming the
/// line.
CodedResponses parse_counts_text(std::string_view text);

/// Parses the inline list form `1:16,2:16`.
CodedResponses parse_counts_list(std::string_view list);

/// Reads a fixture file; throws std::filesystem::filesystem_error when it
/// cannot be opened.
CodedResponses load_counts_file(const std::filesystem::path& path);

}  // namespace finstudio
