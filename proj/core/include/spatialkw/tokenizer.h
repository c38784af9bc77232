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

#ifndef SPATIALKW_TOKENIZER_H_
#define SPATIALKW_TOKENIZER_H_

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace spatialkw {

using StopwordSet = std::unordered_set<std::string>;

struct TokenizerConfig {
  bool lowercase = true;
  // When set, tokens are maximal runs of Unicode letters; an apostrophe or
  // hyphen between two letters is dropped and the halves are joined
  // ("self-possession" -> "selfpossession"). When unset, tokens are
  // whitespace-delimited chunks kept verbatim.
  bool strip_punctuation = true;
  StopwordSet stopwords;
  std::size_t min_token_length = 1;  // in letters
};

// Throws Error(kConfig) if a stop-word entry is empty, or is not lowercase
// while the lowercase flag is set.
void ValidateTokenizerConfig(const TokenizerConfig& config);

// Splits UTF-8 text into word tokens. The input is expected to be already
// lemmatized; this only segments, lowercases and filters. Throws
// Error(kDecode) on malformed UTF-8.
std::vector<std::string> Tokenize(std::string_view raw_text,
                                  const TokenizerConfig& config);

// Applies the tokenizer's segmentation and case folding to a single entry
// (an annotation word, a stop-word line) and joins the pieces. Returns an
// empty string when nothing letter-like survives.
std::string NormalizeWord(std::string_view word, bool lowercase = true,
                          bool strip_punctuation = true);

// Number of Unicode letters in a UTF-8 string.
std::size_t CountLetters(std::string_view utf8);

// One word per line; '#' starts a comment; blank lines are ignored. Entries
// are normalized with NormalizeWord so they match tokenizer output.
StopwordSet ReadStopwords(std::istream& in, bool lowercase = true);
StopwordSet LoadStopwords(const std::string& path, bool lowercase = true);

// Throws Error(kDecode) with the byte offset of the first invalid sequence.
void ValidateUtf8(std::string_view text);

}  // namespace spatialkw

#endif  // SPATIALKW_TOKENIZER_H_
