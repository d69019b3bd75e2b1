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

#include "finstudio/stats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>

#include "finstudio/error.hpp"

namespace finstudio {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename Int>
bool parse_int(std::string_view text, Int& out) {
  text = trim(text);
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

ChoiceCount parse_pair(std::string_view pair, const std::string& where) {
  const auto colon = pair.find(':');
  ChoiceCount cc;
  if (colon == std::string_view::npos || !parse_int(pair.substr(0, colon), cc.code) ||
      !parse_int(pair.substr(colon + 1), cc.count)) {
    throw ParseError(where + ": expected CODE:COUNT, got '" + std::string(trim(pair)) + "'");
  }
  return cc;
}

// Code at 0-based position `index` of the sorted expansion.
std::int64_t code_at(const std::vector<ChoiceCount>& counts, std::uint64_t index) {
  std::uint64_t seen = 0;
  for (const auto& c : counts) {
    seen += c.count;
    if (index < seen) return c.code;
  }
  return counts.back().code;
}

}  // namespace

CodedResponses CodedResponses::from_counts(std::vector<ChoiceCount> counts) {
  for (const auto& c : counts) {
    if (c.code < 1) {
      throw InvalidInput("choice codes must be positive integers, got " + std::to_string(c.code),
                         "counts");
    }
  }
  std::stable_sort(counts.begin(), counts.end(),
                   [](const ChoiceCount& a, const ChoiceCount& b) { return a.code < b.code; });
  CodedResponses out;
  for (const auto& c : counts) {
    if (!out.counts_.empty() && out.counts_.back().code == c.code) {
      out.counts_.back().count += c.count;
    } else {
      out.counts_.push_back(c);
    }
  }
  return out;
}

std::uint64_t CodedResponses::total() const {
  std::uint64_t n = 0;
  for (const auto& c : counts_) n += c.count;
  return n;
}

SurveySummary summarize(const CodedResponses& responses) {
  const std::uint64_t n = responses.total();
  if (n == 0) throw EmptyInput("no responses to summarize", "counts");

  std::vector<ChoiceCount> present;
  for (const auto& c : responses.counts()) {
    if (c.count > 0) present.push_back(c);
  }

  SurveySummary s;
  s.minimum = static_cast<double>(present.front().code);
  s.maximum = static_cast<double>(present.back().code);

  const auto lo = code_at(present, (n - 1) / 2);
  const auto hi = code_at(present, n / 2);
  s.median = (static_cast<double>(lo) + static_cast<double>(hi)) / 2.0;

  long double weighted = 0;
  for (const auto& c : present) weighted += static_cast<long double>(c.code) * c.count;
  const long double mean = weighted / n;
  s.mean = static_cast<double>(mean);

  long double squares = 0;
  for (const auto& c : present) {
    const long double dev = static_cast<long double>(c.code) - mean;
    squares += dev * dev * c.count;
  }
  s.std_dev = static_cast<double>(std::sqrt(squares / n));
  return s;
}

CodedResponses parse_counts_text(std::string_view text) {
  std::vector<ChoiceCount> counts;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    counts.push_back(parse_pair(line, "line " + std::to_string(line_no)));
  }
  return CodedResponses::from_counts(std::move(counts));
}

CodedResponses parse_counts_list(std::string_view list) {
  std::vector<ChoiceCount> counts;
  std::size_t item = 0;
  while (true) {
    const auto comma = list.find(',');
    ++item;
    counts.push_back(parse_pair(list.substr(0, comma), "item " + std::to_string(item)));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return CodedResponses::from_counts(std::move(counts));
}

CodedResponses load_counts_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::filesystem::filesystem_error(
        "cannot open counts file", path,
        std::make_error_code(std::errc::no_such_file_or_directory));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_counts_text(buf.str());
}

}  // namespace finstudio
