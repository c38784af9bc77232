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

#include "spatialkw/tokenizer.h"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>

#include "spatialkw/error.h"

namespace spatialkw {
namespace {

std::vector<UChar32> DecodeUtf8(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(std::numeric_limits<int32_t>::max())) {
    throw Error(ErrorKind::kDecode, "input larger than 2 GiB is not supported");
  }
  std::vector<UChar32> out;
  out.reserve(text.size());
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) {
      throw Error(ErrorKind::kDecode,
                  "invalid UTF-8 sequence at byte offset " + std::to_string(start));
    }
    out.push_back(c);
  }
  return out;
}

void AppendUtf8(std::string& out, UChar32 c) {
  uint8_t buf[U8_MAX_LENGTH];
  int32_t n = 0;
  U8_APPEND_UNSAFE(buf, n, c);
  out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(n));
}

bool IsLetter(UChar32 c) { return u_isalpha(c) != 0; }

bool IsMark(UChar32 c) { return (U_GET_GC_MASK(c) & U_GC_M_MASK) != 0; }

// Apostrophes and hyphens that glue two halves of one word.
bool IsJoiner(UChar32 c) {
  switch (c) {
    case 0x0027:  // '
    case 0x2019:  // right single quotation mark
    case 0x02BC:  // modifier letter apostrophe
    case 0x002D:  // -
    case 0x2010:  // hyphen
    case 0x2011:  // non-breaking hyphen
      return true;
    default:
      return false;
  }
}

bool IsSpace(UChar32 c) { return u_isUWhiteSpace(c) != 0; }

struct Piece {
  std::string text;
  std::size_t letters = 0;
};

// Segments decoded text into raw pieces, before stop-word and length
// filtering.
std::vector<Piece> Segment(const std::vector<UChar32>& cps, bool lowercase,
                           bool strip_punctuation) {
  std::vector<Piece> pieces;
  Piece current;
  auto flush = [&] {
    if (!current.text.empty()) pieces.push_back(std::move(current));
    current = Piece{};
  };
  const std::size_t n = cps.size();
  for (std::size_t i = 0; i < n; ++i) {
    UChar32 c = cps[i];
    if (strip_punctuation) {
      if (IsLetter(c)) {
        AppendUtf8(current.text, lowercase ? u_tolower(c) : c);
        ++current.letters;
      } else if (IsMark(c) && current.letters > 0) {
        AppendUtf8(current.text, c);
      } else if (IsJoiner(c) && current.letters > 0 && i + 1 < n &&
                 IsLetter(cps[i + 1])) {
        continue;
      } else {
        flush();
      }
    } else {
      if (IsSpace(c)) {
        flush();
      } else {
        AppendUtf8(current.text, lowercase ? u_tolower(c) : c);
        if (IsLetter(c)) ++current.letters;
      }
    }
  }
  flush();
  return pieces;
}

bool HasUppercase(std::string_view word) {
  for (UChar32 c : DecodeUtf8(word)) {
    if (u_tolower(c) != c) return true;
  }
  return false;
}

}  // namespace

void ValidateUtf8(std::string_view text) { (void)DecodeUtf8(text); }

void ValidateTokenizerConfig(const TokenizerConfig& config) {
  for (const auto& w : config.stopwords) {
    if (w.empty()) throw Error(ErrorKind::kConfig, "empty stop-word entry");
    if (config.lowercase && HasUppercase(w)) {
      throw Error(ErrorKind::kConfig,
                  "stop-word '" + w + "' is not lowercase but lowercasing is on");
    }
  }
}

std::vector<std::string> Tokenize(std::string_view raw_text,
                                  const TokenizerConfig& config) {
  const auto cps = DecodeUtf8(raw_text);
  auto pieces = Segment(cps, config.lowercase, config.strip_punctuation);
  std::vector<std::string> tokens;
  tokens.reserve(pieces.size());
  const std::size_t min_letters = std::max<std::size_t>(config.min_token_length, 1);
  for (auto& p : pieces) {
    if (p.letters < min_letters) continue;
    if (config.stopwords.contains(p.text)) continue;
    tokens.push_back(std::move(p.text));
  }
  return tokens;
}

std::string NormalizeWord(std::string_view word, bool lowercase,
                          bool strip_punctuation) {
  std::string out;
  for (auto& p : Segment(DecodeUtf8(word), lowercase, strip_punctuation)) {
    if (p.letters == 0) continue;
    out += p.text;
  }
  return out;
}

std::size_t CountLetters(std::string_view utf8) {
  std::size_t n = 0;
  for (UChar32 c : DecodeUtf8(utf8)) {
    if (IsLetter(c)) ++n;
  }
  return n;
}

StopwordSet ReadStopwords(std::istream& in, bool lowercase) {
  StopwordSet set;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::string word = NormalizeWord(line, lowercase);
    if (!word.empty()) set.insert(std::move(word));
  }
  return set;
}

StopwordSet LoadStopwords(const std::string& path, bool lowercase) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open stop-word file: " + path);
  return ReadStopwords(in, lowercase);
}

}  // namespace spatialkw
