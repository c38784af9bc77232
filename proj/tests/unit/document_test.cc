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
#include "testing/synthetic.h"

namespace spatialkw {
namespace {

using Strings = std::vector<std::string>;

std::vector<Position> ToVector(std::span<const Position> s) { return {s.begin(), s.end()}; }

TEST_CASE("positions index for a tiny document") {
  const Strings tokens = {"a", "b", "a"};
  const Document doc = Document::Build(tokens);
  CHECK(doc.size() == 3);
  CHECK(doc.vocabulary_size() == 2);
  CHECK(ToVector(doc.positions("a")) == std::vector<Position>{0, 2});
  CHECK(ToVector(doc.positions("b")) == std::vector<Position>{1});
  CHECK_FALSE(doc.has_chapters());
  CHECK(doc.chapter_count() == 0);
  CHECK(doc.Tokens() == tokens);
}

TEST_CASE("chapter breaks assign 1-based chapter ids") {
  const Strings tokens = {"a", "b", "a", "b"};
  const std::vector<std::size_t> breaks = {2};
  const Document doc = Document::Build(tokens, breaks);
  CHECK(doc.chapter_count() == 2);
  CHECK(std::vector<ChapterId>(doc.chapter_ids().begin(), doc.chapter_ids().end()) ==
        std::vector<ChapterId>{1, 1, 2, 2});
}

TEST_CASE("invalid breaks are validation errors") {
  const Strings tokens = {"a", "b", "c"};
  auto expect_validation = [&](std::vector<std::size_t> breaks) {
    try {
      Document::Build(tokens, breaks);
      FAIL("expected a validation error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kValidation);
    }
  };
  expect_validation({2, 1});
  expect_validation({1, 1});
  expect_validation({3});
}

TEST_CASE("unknown words are not-found errors") {
  const Strings tokens = {"a"};
  const Document doc = Document::Build(tokens);
  CHECK_FALSE(doc.Find("zzz").has_value());
  try {
    doc.IdOf("zzz");
    FAIL("expected not-found");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotFound);
  }
}

TEST_CASE("empty document") {
  const Document doc = Document::Build(Strings{});
  CHECK(doc.empty());
  CHECK(doc.vocabulary_size() == 0);
}

TEST_CASE("10,000-token stream matches a brute-force rescan") {
  std::mt19937_64 rng(2024);
  const Strings tokens = testing::UniformTokens(10000, 150, rng);
  const std::vector<std::size_t> breaks = {1000, 2500, 9999};
  const Document doc = Document::Build(tokens, breaks);
  const auto oracle = testing::RescanPositions(tokens);

  REQUIRE(doc.vocabulary_size() == oracle.size());
  std::size_t total = 0;
  for (const auto& [word, expected] : oracle) {
    const auto got = doc.positions(word);
    REQUIRE(got.size() == expected.size());
    CHECK(std::equal(got.begin(), got.end(), expected.begin()));
    total += got.size();
  }
  CHECK(total == tokens.size());

  ChapterId previous = 1;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const ChapterId c = doc.chapter_of(i);
    CHECK(c >= previous);
    previous = c;
    const auto expected = static_cast<ChapterId>(
        1 + std::count_if(breaks.begin(), breaks.end(), [&](std::size_t b) { return b <= i; }));
    CHECK(c == expected);
  }
  CHECK(doc.chapter_count() == 4);
}

TEST_CASE("concatenated positions cover 0..N-1 exactly") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Strings tokens = testing::ZipfTokens(2000, 300, rng);
    const Document doc = Document::Build(tokens);
    std::vector<Position> all;
    for (WordId id = 0; id < doc.vocabulary_size(); ++id) {
      const auto p = doc.positions(id);
      CHECK(!p.empty());
      CHECK(std::adjacent_find(p.begin(), p.end(), std::greater_equal<>()) == p.end());
      all.insert(all.end(), p.begin(), p.end());
    }
    std::sort(all.begin(), all.end());
    std::vector<Position> expected(tokens.size());
    std::iota(expected.begin(), expected.end(), 0);
    CHECK(all == expected);
  }
}

TEST_CASE("reordered documents share the vocabulary and drop chapters") {
  const Strings tokens = {"x", "y", "x", "z"};
  const std::vector<std::size_t> breaks = {2};
  const Document doc = Document::Build(tokens, breaks);
  std::vector<WordId> ids(doc.token_ids().begin(), doc.token_ids().end());
  std::reverse(ids.begin(), ids.end());
  const Document reordered = doc.WithTokenOrder(ids);
  CHECK(reordered.vocabulary() == doc.vocabulary());
  CHECK(reordered.Tokens() == Strings{"z", "x", "y", "x"});
  CHECK_FALSE(reordered.has_chapters());
  CHECK(ToVector(reordered.positions("x")) == std::vector<Position>{1, 3});

  ids[0] = ids[1];
  CHECK_THROWS_AS(doc.WithTokenOrder(ids), Error);
}

}  // namespace
}  // namespace spatialkw
