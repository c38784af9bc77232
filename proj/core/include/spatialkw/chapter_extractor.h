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

#ifndef SPATIALKW_CHAPTER_EXTRACTOR_H_
#define SPATIALKW_CHAPTER_EXTRACTOR_H_

#include <cstddef>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spatialkw/document.h"

namespace spatialkw {

// How a word's occurrences spread over chapters.
struct ChapterHistogram {
  std::string word;
  // m_w(c) for every chapter c that contains the word (absent chapters are 0).
  std::map<ChapterId, std::size_t> counts_per_chapter;
  // V_w(s): number of chapters containing the word exactly s times, s >= 1.
  std::map<std::size_t, std::size_t> occupancy;
  std::size_t total = 0;  // N_w
};

// Throws Error(kUnsupportedDocument) when the document has no chapters.
ChapterHistogram MakeChapterHistogram(const Document& doc, WordId id);
ChapterHistogram MakeChapterHistogram(const Document& doc, std::string_view word);

// sum_s s^2 V_w(s) / N_w: the mean, over occurrences, of how many times the
// word appears in the chapter holding that occurrence.
double ChapterScore(const ChapterHistogram& hist);

// -sum_s p_s ln p_s with p_s = s V_w(s) / N_w.
double ChapterEntropyScore(const ChapterHistogram& hist);

struct ChapterScoreEntry {
  std::string word;
  double score = 0.0;
  double entropy_score = 0.0;
  std::size_t count = 0;
};

// Every word scored, ordered by descending score, then descending count,
// then lexicographically. Throws Error(kUnsupportedDocument) without chapters.
std::vector<ChapterScoreEntry> RankByChapterScore(const Document& doc);

// The first n entries of RankByChapterScore (all of them when n exceeds the
// vocabulary).
std::vector<ChapterScoreEntry> TopByChapterScore(const Document& doc, std::size_t n);

// word,score,entropy_score,count
void WriteChapterCsv(std::ostream& out, std::span<const ChapterScoreEntry> rows);

}  // namespace spatialkw

#endif  // SPATIALKW_CHAPTER_EXTRACTOR_H_
