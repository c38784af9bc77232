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
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "spatialkw/document.h"
#include "spatialkw/error.h"
#include "spatialkw/gap_stats.h"
#include "spatialkw/permutation.h"
#include "testing/synthetic.h"

namespace spatialkw {
namespace {

using Strings = std::vector<std::string>;

TEST_CASE("single-token document is unchanged") {
  const Document doc = Document::Build(Strings{"solo"});
  CHECK(Permute(doc, 42).Tokens() == Strings{"solo"});
}

TEST_CASE("permutation preserves the token multiset and drops chapters") {
  std::mt19937_64 rng(3);
  const Strings tokens = testing::ZipfTokens(5000, 400, rng);
  const std::vector<std::size_t> breaks = {1000, 3000};
  const Document doc = Document::Build(tokens, breaks);
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL, 0xffffffffffffffffULL}) {
    const Document shuffled = Permute(doc, seed);
    CHECK(shuffled.size() == doc.size());
    CHECK_FALSE(shuffled.has_chapters());
    CHECK(testing::RecountWords(shuffled.Tokens()) == testing::RecountWords(tokens));
    for (WordId id = 0; id < doc.vocabulary_size(); ++id) {
      CHECK(OrdinaryFrequency(shuffled, id) == OrdinaryFrequency(doc, id));
    }
  }
}

TEST_CASE("permutation is deterministic per seed and differs across seeds") {
  std::vector<std::string> tokens;
  for (int i = 0; i < 10000; ++i) tokens.push_back("t" + std::to_string(i));
  const Document doc = Document::Build(tokens);
  const auto order = [&](std::uint64_t seed) {
    const Document p = Permute(doc, seed);
    return std::vector<std::size_t>(p.token_ids().begin(), p.token_ids().end());
  };
  const auto a1 = order(1);
  const auto a2 = order(1);
  const auto b = order(2);
  CHECK(a1 == a2);
  std::vector<std::size_t> identity(tokens.size());
  std::iota(identity.begin(), identity.end(), 0);
  const std::size_t da = testing::KendallDistance(identity, a1);
  const std::size_t db = testing::KendallDistance(identity, b);
  CHECK(da != db);
  // A uniform permutation has about n(n-1)/4 inversions.
  const double expected = 10000.0 * 9999.0 / 4.0;
  CHECK(std::abs(static_cast<double>(da) - expected) / expected < 0.02);
  CHECK(std::abs(static_cast<double>(db) - expected) / expected < 0.02);
}

TEST_CASE("shuffle positions are uniform") {
  // Each of 5 items lands at each slot with probability 1/5.
  std::vector<std::vector<int>> hits(5, std::vector<int>(5, 0));
  const int trials = 50000;
  for (int t = 0; t < trials; ++t) {
    std::vector<int> items = {0, 1, 2, 3, 4};
    ShuffleInPlace(std::span<int>(items), static_cast<std::uint64_t>(t));
    for (int slot = 0; slot < 5; ++slot) ++hits[items[slot]][slot];
  }
  double chi2 = 0.0;
  const double e = trials / 5.0;
  for (const auto& row : hits)
    for (int h : row) chi2 += (h - e) * (h - e) / e;
  // 16 degrees of freedom (rows and columns sum to fixed totals); p = 0.001 at 39.25.
  CHECK(chi2 < 39.25);
}

TEST_CASE("bounded draws stay in range") {
  std::mt19937_64 rng(8);
  for (std::uint64_t bound : {1ULL, 2ULL, 3ULL, 7ULL, 1000ULL, (1ULL << 63) + 5}) {
    for (int i = 0; i < 1000; ++i) CHECK(UniformBelow(rng, bound) < bound);
  }
}

TEST_CASE("a document of one repeated word scores exactly 1") {
  const Document doc = Document::Build(Strings(50, "w"));
  const auto s = AScore(doc, "w", 7, 3);
  CHECK(s.a == 1.0);
  CHECK(s.a6 == 1.0);
  CHECK(s.realizations == 3);
  CHECK(s.seed == 7);
}

TEST_CASE("a-score errors") {
  const Document doc = Document::Build(Strings{"a", "b", "a"});
  try {
    AScore(doc, "b", 1);
    FAIL("expected undefined statistic");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kUndefinedStatistic);
  }
  CHECK_THROWS_AS(AScore(doc, "a", 1, 0), Error);
  CHECK_THROWS_AS(ScoreAll(doc, 1, 0), Error);
}

TEST_CASE("a-score averages permuted moments over consecutive seeds") {
  std::mt19937_64 rng(21);
  const Document doc = Document::Build(testing::ZipfTokens(3000, 100, rng));
  const std::string word(doc.word(0));
  const auto averaged = AScore(doc, word, 100, 4);
  double c2 = 0.0;
  double c6 = 0.0;
  for (std::uint64_t s = 100; s < 104; ++s) {
    const auto m = ComputeMoments(Permute(doc, s).positions(word));
    c2 += m.c2;
    c6 += m.c6;
  }
  CHECK(averaged.c2_perm == doctest::Approx(c2 / 4.0).epsilon(1e-12));
  CHECK(averaged.c6_perm == doctest::Approx(c6 / 4.0).epsilon(1e-12));
  CHECK(averaged.a == doctest::Approx(averaged.c2_perm / averaged.c2).epsilon(1e-12));
  CHECK(averaged.ratio(2) == averaged.a);
  CHECK(averaged.ratio(6) == averaged.a6);

  const auto again = AScore(doc, word, 100, 4);
  CHECK(again.a == averaged.a);
  CHECK(again.a6 == averaged.a6);
}

TEST_CASE("ScoreAll covers exactly the repeated words and agrees with AScore") {
  std::mt19937_64 rng(22);
  const Document doc = Document::Build(testing::ZipfTokens(4000, 800, rng));
  const auto scores = ScoreAll(doc, 9, 2);
  std::size_t repeated = 0;
  for (WordId id = 0; id < doc.vocabulary_size(); ++id) repeated += doc.count(id) >= 2;
  REQUIRE(scores.size() == repeated);
  for (const auto& s : scores) {
    CHECK(s.count >= 2);
    CHECK(s.a > 0.0);
    CHECK(s.a6 > 0.0);
  }
  const auto single = AScore(doc, scores.front().word, 9, 2);
  CHECK(single.a == scores.front().a);
  CHECK(single.a6 == scores.front().a6);
}

TEST_CASE("clustered planted words respond strongly to permutation") {
  testing::PlantedOptions options;
  int a6_hits = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto planted = testing::MakePlantedText(options, 1000 + seed);
    const Document doc = Document::Build(planted.tokens);
    const auto s = AScore(doc, planted.clustered.front(), seed);
    if (s.a6 >= 3.0) ++a6_hits;
  }
  MESSAGE("A6 >= 3 for " << a6_hits << "/100 seeds");
  CHECK(a6_hits >= 95);
}

TEST_CASE("bursty planted words are global under permutation") {
  testing::PlantedOptions options;
  int a_hits = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto planted = testing::MakePlantedText(options, 2000 + seed);
    const Document doc = Document::Build(planted.tokens);
    const auto s = AScore(doc, planted.bursty.front(), seed);
    if (s.a <= 0.2) ++a_hits;
  }
  MESSAGE("A <= 1/5 for " << a_hits << "/100 seeds");
  CHECK(a_hits >= 95);
}

}  // namespace
}  // namespace spatialkw
