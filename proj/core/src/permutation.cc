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

#include "spatialkw/permutation.h"

#include "spatialkw/error.h"
#include "spatialkw/gap_stats.h"

namespace spatialkw {

std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
  __extension__ typedef unsigned __int128 u128;
  u128 m = static_cast<u128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<u128>(rng()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

Document Permute(const Document& doc, std::uint64_t seed) {
  std::vector<WordId> ids(doc.token_ids().begin(), doc.token_ids().end());
  ShuffleInPlace(std::span<WordId>(ids), seed);
  return doc.WithTokenOrder(std::move(ids));
}

double PermutationScore::ratio(int order) const {
  if (order == 2) return a;
  if (order == 6) return a6;
  throw Error(ErrorKind::kDomain, "permutation ratio is defined for orders 2 and 6");
}

namespace {

void CheckRealizations(std::size_t realizations) {
  if (realizations == 0) {
    throw Error(ErrorKind::kDomain, "realizations must be at least 1");
  }
}

}  // namespace

std::vector<PermutationScore> ScoreAll(const Document& doc, std::uint64_t seed,
                                       std::size_t realizations) {
  CheckRealizations(realizations);
  std::vector<PermutationScore> scores;
  for (WordId id = 0; id < doc.vocabulary_size(); ++id) {
    if (doc.count(id) < 2) continue;
    const GapMoments m = ComputeMoments(doc.positions(id));
    PermutationScore s;
    s.id = id;
    s.word = std::string(doc.word(id));
    s.count = doc.count(id);
    s.c2 = m.c2;
    s.c6 = m.c6;
    s.realizations = realizations;
    s.seed = seed;
    scores.push_back(std::move(s));
  }
  if (scores.empty()) return scores;

  for (std::size_t r = 0; r < realizations; ++r) {
    const Document shuffled = Permute(doc, seed + r);
    for (auto& s : scores) {
      const GapMoments m = ComputeMoments(shuffled.positions(s.id));
      s.c2_perm += m.c2;
      s.c6_perm += m.c6;
    }
  }
  const auto n = static_cast<double>(realizations);
  for (auto& s : scores) {
    s.c2_perm /= n;
    s.c6_perm /= n;
    s.a = s.c2_perm / s.c2;
    s.a6 = s.c6_perm / s.c6;
  }
  return scores;
}

PermutationScore AScore(const Document& doc, std::string_view word, std::uint64_t seed,
                        std::size_t realizations) {
  CheckRealizations(realizations);
  const WordId id = doc.IdOf(word);
  if (doc.count(id) < 2) {
    throw Error(ErrorKind::kUndefinedStatistic,
                "gap moments need at least two occurrences of '" + std::string(word) + "'");
  }
  const GapMoments m = ComputeMoments(doc.positions(id));
  PermutationScore s;
  s.id = id;
  s.word = std::string(word);
  s.count = doc.count(id);
  s.c2 = m.c2;
  s.c6 = m.c6;
  s.realizations = realizations;
  s.seed = seed;
  for (std::size_t r = 0; r < realizations; ++r) {
    const GapMoments p = ComputeMoments(Permute(doc, seed + r).positions(id));
    s.c2_perm += p.c2;
    s.c6_perm += p.c6;
  }
  s.c2_perm /= static_cast<double>(realizations);
  s.c6_perm /= static_cast<double>(realizations);
  s.a = s.c2_perm / s.c2;
  s.a6 = s.c6_perm / s.c6;
  return s;
}

}  // namespace spatialkw
