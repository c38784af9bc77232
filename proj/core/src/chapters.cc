// Copyright 2026 The spatialkw Authors.
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

#include "spatialkw/chapters.h"

#include "spatialkw/error.h"

namespace spatialkw {
namespace {

template <typename Fn>
void ForEachLine(std::string_view text, Fn&& fn) {
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line);
    if (end == text.size()) break;
    start = end + 1;
  }
}

}  // namespace

ChapterPattern ChapterPattern::Literal(std::string marker) {
  if (marker.empty()) throw Error(ErrorKind::kConfig, "empty chapter marker");
  ChapterPattern p;
  p.text_ = std::move(marker);
  return p;
}

ChapterPattern ChapterPattern::Regex(std::string expression) {
  if (expression.empty()) throw Error(ErrorKind::kConfig, "empty chapter regex");
  ChapterPattern p;
  try {
    p.regex_.emplace(expression, std::regex::ECMAScript);
  } catch (const std::regex_error& e) {
    throw Error(ErrorKind::kConfig,
                "malformed chapter regex '" + expression + "': " + e.what());
  }
  p.text_ = std::move(expression);
  return p;
}

ChapterPattern ChapterPattern::Parse(std::string_view text) {
  constexpr std::string_view kRegexPrefix = "re:";
  if (text.starts_with(kRegexPrefix)) {
    return Regex(std::string(text.substr(kRegexPrefix.size())));
  }
  return Literal(std::string(text));
}

bool ChapterPattern::Matches(std::string_view line) const {
  if (regex_) return std::regex_search(line.begin(), line.end(), *regex_);
  const auto first = line.find_first_not_of(" \t");
  if (first == std::string_view::npos) return false;
  return line.substr(first).starts_with(text_);
}

std::vector<std::size_t> DetectChapters(std::string_view raw_text,
                                        const ChapterPattern& pattern,
                                        const TokenizerConfig& config) {
  ValidateUtf8(raw_text);
  std::vector<std::size_t> breaks;
  std::size_t count = 0;
  ForEachLine(raw_text, [&](std::string_view line) {
    count += Tokenize(line, config).size();
    if (pattern.Matches(line) && (breaks.empty() || breaks.back() != count)) {
      breaks.push_back(count);
    }
  });
  if (!breaks.empty() && breaks.back() >= count) breaks.pop_back();
  return breaks;
}

IngestedText IngestText(std::string_view raw_text, const TokenizerConfig& config,
                        const ChapterPattern* pattern) {
  ValidateTokenizerConfig(config);
  IngestedText out;
  if (pattern == nullptr) {
    out.tokens = Tokenize(raw_text, config);
    return out;
  }
  ValidateUtf8(raw_text);
  ForEachLine(raw_text, [&](std::string_view line) {
    if (pattern->Matches(line)) {
      const std::size_t at = out.tokens.size();
      if (at > 0 && (out.chapter_breaks.empty() || out.chapter_breaks.back() != at)) {
        out.chapter_breaks.push_back(at);
      }
      return;
    }
    for (auto& t : Tokenize(line, config)) out.tokens.push_back(std::move(t));
  });
  if (!out.chapter_breaks.empty() && out.chapter_breaks.back() >= out.tokens.size()) {
    out.chapter_breaks.pop_back();
  }
  return out;
}

}  // namespace spatialkw
