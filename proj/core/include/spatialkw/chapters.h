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

#ifndef SPATIALKW_CHAPTERS_H_
#define SPATIALKW_CHAPTERS_H_

#include <cstddef>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "spatialkw/tokenizer.h"

namespace spatialkw {

// A chapter delimiter, matched line by line. A literal marker matches lines
// whose leading-whitespace-trimmed text starts with it; a regular expression
// (ECMAScript syntax) matches if it is found anywhere in the line.
class ChapterPattern {
 public:
  static ChapterPattern Literal(std::string marker);
  static ChapterPattern Regex(std::string expression);
  // "re:<expr>" selects a regular expression, anything else is a literal.
  static ChapterPattern Parse(std::string_view text);

  bool Matches(std::string_view line) const;
  const std::string& text() const { return text_; }
  bool is_regex() const { return regex_.has_value(); }

 private:
  std::string text_;
  std::optional<std::regex> regex_;
};

// Token index (in Tokenize(raw_text, config) coordinates) of the first token
// after each delimiter line. Consecutive delimiters with no tokens between
// them collapse to one break; a delimiter after the last token yields none.
std::vector<std::size_t> DetectChapters(std::string_view raw_text,
                                        const ChapterPattern& pattern,
                                        const TokenizerConfig& config);

struct IngestedText {
  std::vector<std::string> tokens;
  std::vector<std::size_t> chapter_breaks;
};

// Tokenizes a whole text and, when a pattern is given, drops the delimiter
// lines themselves so headings ("Chapter 12") do not enter the token stream.
// A break at index 0 is omitted: text before the first heading merges into
// chapter 1.
IngestedText IngestText(std::string_view raw_text, const TokenizerConfig& config,
                        const ChapterPattern* pattern = nullptr);

}  // namespace spatialkw

#endif  // SPATIALKW_CHAPTERS_H_
