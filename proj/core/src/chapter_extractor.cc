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

#include "spatialkw/chapter_extractor.h"

#include <algorithm>
#include <cmath>
#include <iomanip>

#include "spatialkw/error.h"

namespace spatialkw {
namespace {

void RequireChapters(const Document& doc) {
  if (!doc.has_chapters()) {
    throw Error(ErrorKind::kUnsupportedDocument,
                "document has no chapter structure; supply a chapter pattern");
  }
}

}  // namespace

ChapterHistogram MakeChapterHistogram(const Document& doc, WordId id) {
  RequireChapters(doc);
  ChapterHistogram h;
  h.word = std::string(doc.word(id));
  for (Position p : doc.positions(id)) ++h.counts_per_chapter[doc.chapter_of(p)];
  for (const auto& [chapter, m] : h.counts_per_chapter) ++h.occupancy[m];
  h.total = doc.count(id);
  return h;
}

ChapterHistogram MakeChapterHistogram(const Document& doc, std::string_view word) {
  return MakeChapterHistogram(doc, doc.IdOf(word));
}

double ChapterScore(const ChapterHistogram& hist) {
  if (hist.total == 0) throw Error(ErrorKind::kDomain, "chapter score of an absent word");
  double sum = 0.0;
  for (const auto& [s, v] : hist.occupancy) {
    sum += static_cast<double>(s) * static_cast<double>(s) * static_cast<double>(v);
  }
  return sum / static_cast<double>(hist.total);
}

double ChapterEntropyScore(const ChapterHistogram& hist) {
  if (hist.total == 0) throw Error(ErrorKind::kDomain, "chapter entropy of an absent word");
  double h = 0.0;
  const auto n = static_cast<double>(hist.total);
  for (const auto& [s, v] : hist.occupancy) {
    const double p = static_cast<double>(s) * static_cast<double>(v) / n;
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

std::vector<ChapterScoreEntry> RankByChapterScore(const Document& doc) {
  RequireChapters(doc);
  std::vector<ChapterScoreEntry> rows;
  rows.reserve(doc.vocabulary_size());
  for (WordId id = 0; id < doc.vocabulary_size(); ++id) {
    const ChapterHistogram h = MakeChapterHistogram(doc, id);
    rows.push_back({h.word, ChapterScore(h), ChapterEntropyScore(h), h.total});
  }
  std::sort(rows.begin(), rows.end(),
            [](const ChapterScoreEntry& a, const ChapterScoreEntry& b) {
              if (a.score != b.score) return a.score > b.score;
              if (a.count != b.count) return a.count > b.count;
              return a.word < b.word;
            });
  return rows;
}

std::vector<ChapterScoreEntry> TopByChapterScore(const Document& doc, std::size_t n) {
  auto rows = RankByChapterScore(doc);
  if (rows.size() > n) rows.resize(n);
  return rows;
}

void WriteChapterCsv(std::ostream& out, std::span<const ChapterScoreEntry> rows) {
  const auto precision = out.precision();
  out << std::setprecision(10);
  out << "word,score,entropy_score,count\n";
  for (const auto& r : rows) {
    out << r.word << ',' << r.score << ',' << r.entropy_score << ',' << r.count << '\n';
  }
  out.precision(precision);
}

}  // namespace spatialkw
