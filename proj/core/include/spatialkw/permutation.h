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

#ifndef SPATIALKW_PERMUTATION_H_
#define SPATIALKW_PERMUTATION_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spatialkw/document.h"

namespace spatialkw {

// Shuffles are Fisher-Yates over std::mt19937_64 (whose output sequence is
// fixed by the C++ standard) with Lemire's multiply-shift rejection method for
// bounded draws. Both pieces are implemented here rather than taken from
// std::shuffle / std::uniform_int_distribution, whose outputs vary between
// standard libraries. Bump the version suffix if either changes.
inline constexpr std::string_view kGeneratorName = "mt19937_64/fisher-yates/lemire-v1";

// Uniform integer in [0, bound). bound must be > 0.
std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound);

template <typename T>
void ShuffleInPlace(std::span<T> items, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(UniformBelow(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

// Uniform random reordering of the token multiset, deterministic in `seed`.
// Chapter structure is dropped.
Document Permute(const Document& doc, std::uint64_t seed);

// Response of one word's gap moments to random permutation of the text:
// a = C2_perm / C2 and a6 = C6_perm / C6, with the permuted moment averaged
// over `realizations` shuffles seeded seed, seed + 1, ...
struct PermutationScore {
  WordId id = 0;
  std::string word;
  std::size_t count = 0;
  double c2 = 0.0;
  double c6 = 0.0;
  double c2_perm = 0.0;
  double c6_perm = 0.0;
  double a = 0.0;
  double a6 = 0.0;
  std::size_t realizations = 1;
  std::uint64_t seed = 0;

  // order 2 -> a, order 6 -> a6; throws Error(kDomain) otherwise.
  double ratio(int order) const;
};

// Throws Error(kUndefinedStatistic) if the word occurs fewer than 2 times,
// Error(kNotFound) if it does not occur, Error(kDomain) if realizations == 0.
PermutationScore AScore(const Document& doc, std::string_view word, std::uint64_t seed,
                        std::size_t realizations = 1);

// Scores every word with at least two occurrences, sharing each shuffle
// across all words. Result is in WordId order.
std::vector<PermutationScore> ScoreAll(const Document& doc, std::uint64_t seed,
                                       std::size_t realizations = 1);

}  // namespace spatialkw

#endif  // SPATIALKW_PERMUTATION_H_
