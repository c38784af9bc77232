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

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "spatialkw/document.h"
#include "spatialkw/gap_stats.h"
#include "spatialkw/luhn.h"
#include "spatialkw/permutation.h"
#include "testing/synthetic.h"

namespace spatialkw {
namespace {

using Strings = std::vector<std::string>;

// Builds a rank table from explicit counts, already in descending order.
std::vector<RankEntry> Table(const std::vector<std::size_t>& counts) {
  std::vector<RankEntry> out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    RankEntry e;
    e.id = static_cast<WordId>(i);
    e.word = "w" + std::to_string(i);
    e.count = counts[i];
    e.rank = i + 1;
    out.push_back(e);
  }
  return out;
}

// Brute-force r10: for each rank, count rows sharing its frequency.
std::size_t BruteR10(const std::vector<RankEntry>& table) {
  for (const auto& row : table) {
    std::size_t same = 0;
    for (const auto& other : table) same += other.count == row.count ? 1 : 0;
    if (same >= 10) return row.rank;
  }
  return table.empty() ? 0 : table.back().rank;
}

TEST_CASE("unique frequencies fall back to the last rank") {
  CHECK(ZipfR10(Table({9, 7, 5, 3, 1})) == 5);
  CHECK(ZipfR10(Table({})) == 0);
}

TEST_CASE("first rank of a plateau of twelve") {
  std::vector<std::size_t> counts = {20, 19, 18, 17, 16};
  counts.insert(counts.end(), 12, 3);
  CHECK(ZipfR10(Table(counts)) == 6);
}

TEST_CASE("exactly ten words after fifty unique frequencies") {
  std::vector<std::size_t> counts;
  for (std::size_t i = 0; i < 50; ++i) counts.push_back(100 - i);
  counts.insert(counts.end(), 10, 2);
  counts.insert(counts.end(), 3, 1);
  CHECK(ZipfR10(Table(counts)) == 51);
  counts.erase(counts.begin() + 50);
  CHECK(ZipfR10(Table(counts)) == 62);
}

TEST_CASE("r10 agrees with a brute-force scan on Zipf texts") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const Document doc = Document::Build(testing::ZipfTokens(500 + 300 * trial, 400, rng));
    const auto table = RankFrequencyTable(doc);
    CHECK(ZipfR10(table) == BruteR10(table));
    const auto cut = ComputeLuhnCutoffs(table);
    CHECK(cut.r_min == 1);
    CHECK(cut.r_max == ZipfR10(table));
    CHECK(cut.r_max <= table.size());
  }
}

TEST_CASE("extraction is a prefix of the rank table with nonincreasing scores") {
  std::mt19937_64 rng(15);
  const Document doc = Document::Build(testing::ZipfTokens(20000, 2000, rng));
  const auto table = RankFrequencyTable(doc);
  const std::size_t r10 = ZipfR10(table);
  for (std::size_t max_words : {0UL, 1UL, 10UL, 282UL, 100000UL}) {
    const auto out = LuhnExtract(doc, max_words);
    CHECK(out.size() == std::min(max_words, r10));
    for (std::size_t i = 0; i < out.size(); ++i) {
      CHECK(out[i].word == table[i].word);
      if (i > 0) CHECK(out[i].count <= out[i - 1].count);
    }
  }
}

TEST_CASE("large text yields the requested number of candidates") {
  std::mt19937_64 rng(16);
  const Document doc = Document::Build(testing::ZipfTokens(350000, 20000, rng));
  REQUIRE(ZipfR10(RankFrequencyTable(doc)) >= 282);
  CHECK(LuhnExtract(doc, 282).size() == 282);
}

TEST_CASE("empty document gives an empty list") {
  CHECK(LuhnExtract(Document::Build(Strings{}), 282).empty());
}

TEST_CASE("r10 depends only on frequencies") {
  std::mt19937_64 rng(17);
  const Document doc = Document::Build(testing::ZipfTokens(8000, 700, rng));
  const std::size_t r10 = ZipfR10(RankFrequencyTable(doc));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    CHECK(ZipfR10(RankFrequencyTable(Permute(doc, seed))) == r10);
  }
}

TEST_CASE("csv layout") {
  const Document doc = Document::Build(Strings{"b", "a", "a"});
  std::ostringstream out;
  WriteLuhnCsv(out, LuhnExtract(doc, 10));
  CHECK(out.str() == "bucket,word,score,rank,count\nluhn,a,2,1,2\nluhn,b,1,2,1\n");
}

}  // namespace
}  // namespace spatialkw
