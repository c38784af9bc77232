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

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "spatialkw/chapter_extractor.h"
#include "spatialkw/chapters.h"
#include "spatialkw/document.h"
#include "spatialkw/error.h"
#include "spatialkw/stopwords.h"
#include "testing/synthetic.h"

namespace spatialkw {
namespace {

using Strings = std::vector<std::string>;

// Chapters given as token lists; returns the joined document.
Document FromChapters(const std::vector<Strings>& chapters) {
  Strings tokens;
  std::vector<std::size_t> breaks;
  for (const auto& c : chapters) {
    if (!tokens.empty()) breaks.push_back(tokens.size());
    tokens.insert(tokens.end(), c.begin(), c.end());
  }
  return Document::Build(tokens, breaks);
}

Document FixtureDocument() {
  const std::string text =
      testing::ReadTestFile(std::string(SPATIALKW_TEST_DATA_DIR) + "/gutenberg_sample.txt");
  TokenizerConfig config;
  config.stopwords = EnglishStopwords();
  const auto pattern = ChapterPattern::Parse("CHAPTER");
  const auto ingested = IngestText(text, config, &pattern);
  return Document::Build(ingested.tokens, ingested.chapter_breaks);
}

TEST_CASE("once per chapter") {
  const Document doc = FromChapters({{"w", "x"}, {"w"}, {"y", "w"}});
  const auto h = MakeChapterHistogram(doc, "w");
  CHECK(h.total == 3);
  CHECK(h.occupancy == std::map<std::size_t, std::size_t>{{1, 3}});
  CHECK(ChapterScore(h) == 1.0);
  CHECK(ChapterEntropyScore(h) == 0.0);
}

TEST_CASE("counts (2,1,0) over three chapters") {
  const Document doc = FromChapters({{"w", "w"}, {"w", "x"}, {"x"}});
  const auto h = MakeChapterHistogram(doc, "w");
  CHECK(h.occupancy == std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}});
  CHECK(h.counts_per_chapter == std::map<ChapterId, std::size_t>{{1, 2}, {2, 1}});
  CHECK(ChapterScore(h) == doctest::Approx(5.0 / 3.0));
  const double expected = -(2.0 / 3.0) * std::log(2.0 / 3.0) - (1.0 / 3.0) * std::log(1.0 / 3.0);
  CHECK(ChapterEntropyScore(h) == doctest::Approx(expected));
  CHECK(ChapterEntropyScore(h) == doctest::Approx(0.6365).epsilon(1e-4));
}

TEST_CASE("all occurrences in one chapter score N_w") {
  const Document doc = FromChapters({{"x"}, {"w", "w", "w", "w"}, {"x"}});
  const auto h = MakeChapterHistogram(doc, "w");
  CHECK(ChapterScore(h) == 4.0);
  CHECK(ChapterEntropyScore(h) == 0.0);
}

TEST_CASE("documents without chapters are unsupported") {
  const Document doc = Document::Build(Strings{"a", "b", "a"});
  auto expect_unsupported = [](auto fn) {
    try {
      fn();
      FAIL("expected unsupported document");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kUnsupportedDocument);
    }
  };
  expect_unsupported([&] { MakeChapterHistogram(doc, "a"); });
  expect_unsupported([&] { TopByChapterScore(doc, 5); });
}

TEST_CASE("fixture histograms match a per-chapter recount") {
  const Document doc = FixtureDocument();
  REQUIRE(doc.chapter_count() == 7);
  const Strings tokens = doc.Tokens();
  for (WordId id = 0; id < doc.vocabulary_size(); ++id) {
    const std::string word(doc.word(id));
    std::map<ChapterId, std::size_t> per_chapter;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i] == word) ++per_chapter[doc.chapter_of(i)];
    }
    const auto h = MakeChapterHistogram(doc, id);
    CHECK(h.counts_per_chapter == per_chapter);
    std::size_t sum_m = 0;
    std::size_t sum_sv = 0;
    for (const auto& [c, m] : h.counts_per_chapter) sum_m += m;
    for (const auto& [s, v] : h.occupancy) sum_sv += s * v;
    CHECK(sum_m == h.total);
    CHECK(sum_sv == h.total);
    const double score = ChapterScore(h);
    CHECK(score >= 1.0);
    CHECK(score <= static_cast<double>(h.total));
    CHECK(ChapterEntropyScore(h) <= std::log(static_cast<double>(h.occupancy.size())) + 1e-12);
  }
}

TEST_CASE("ranking agrees with score-all-and-sort") {
  const Document doc = FixtureDocument();
  std::vector<ChapterScoreEntry> brute;
  for (WordId id = 0; id < doc.vocabulary_size(); ++id) {
    std::map<ChapterId, std::size_t> m;
    for (Position p : doc.positions(id)) ++m[doc.chapter_of(p)];
    double sum_sq = 0.0;
    for (const auto& [c, n] : m) sum_sq += static_cast<double>(n * n);
    brute.push_back({std::string(doc.word(id)), sum_sq / static_cast<double>(doc.count(id)), 0.0,
                     doc.count(id)});
  }
  std::sort(brute.begin(), brute.end(), [](const auto& x, const auto& y) {
    if (x.score != y.score) return x.score > y.score;
    if (x.count != y.count) return x.count > y.count;
    return x.word < y.word;
  });
  const auto ranked = RankByChapterScore(doc);
  REQUIRE(ranked.size() == brute.size());
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    CHECK(ranked[i].word == brute[i].word);
    CHECK(ranked[i].score == doctest::Approx(brute[i].score));
  }
  CHECK(TopByChapterScore(doc, 36).size() == 36);
  CHECK(TopByChapterScore(doc, 0).empty());
  CHECK(TopByChapterScore(doc, 1000000).size() == doc.vocabulary_size());
}

TEST_CASE("scores are invariant under chapter relabeling") {
  std::mt19937_64 rng(10);
  std::vector<Strings> chapters;
  for (int c = 0; c < 12; ++c) chapters.push_back(testing::ZipfTokens(400, 120, rng));
  const auto original = RankByChapterScore(FromChapters(chapters));
  std::shuffle(chapters.begin(), chapters.end(), rng);
  const auto relabeled = RankByChapterScore(FromChapters(chapters));
  REQUIRE(original.size() == relabeled.size());
  for (std::size_t i = 0; i < original.size(); ++i) {
    CHECK(original[i].word == relabeled[i].word);
    CHECK(original[i].score == relabeled[i].score);
    CHECK(original[i].entropy_score == doctest::Approx(relabeled[i].entropy_score));
  }
}

TEST_CASE("csv layout") {
  const Document doc = FromChapters({{"w", "w"}, {"w", "x"}});
  std::ostringstream out;
  WriteChapterCsv(out, TopByChapterScore(doc, 10));
  CHECK(out.str().starts_with("word,score,entropy_score,count\nw,"));
}

}  // namespace
}  // namespace spatialkw
