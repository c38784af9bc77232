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

#ifndef SPATIALKW_LUHN_H_
#define SPATIALKW_LUHN_H_

#include <cstddef>
#include <ostream>
#include <span>
#include <vector>

#include "spatialkw/document.h"
#include "spatialkw/gap_stats.h"

namespace spatialkw {

// Luhn's frequency-band selection. Stop-words are assumed to be removed
// already, so there is no high-frequency cut (r_min = 1); the low-frequency
// cut is the rank r10 where the rank-frequency curve turns into plateaus.
struct LuhnCutoffs {
  std::size_t r_min = 1;
  std::size_t r_max = 0;
};

// Smallest rank r such that at least 10 distinct words share the frequency
// of the word at rank r; the last rank if no frequency is that crowded, and 0
// for an empty table. `table` must be in RankFrequencyTable order.
std::size_t ZipfR10(std::span<const RankEntry> table);

LuhnCutoffs ComputeLuhnCutoffs(std::span<const RankEntry> table);

// The first min(max_words, r10) rows of the rank-frequency table. The score
// of a candidate is its count.
std::vector<RankEntry> LuhnExtract(const Document& doc, std::size_t max_words);

// bucket,word,score,rank,count with bucket = "luhn"
void WriteLuhnCsv(std::ostream& out, std::span<const RankEntry> candidates);

}  // namespace spatialkw

#endif  // SPATIALKW_LUHN_H_
