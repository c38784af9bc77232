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

#include "spatialkw/luhn.h"

#include <algorithm>
#include <unordered_map>

namespace spatialkw {

namespace {
constexpr std::size_t kPlateauSize = 10;
}  // namespace

std::size_t ZipfR10(std::span<const RankEntry> table) {
  if (table.empty()) return 0;
  std::unordered_map<std::size_t, std::size_t> words_at;
  for (const auto& e : table) ++words_at[e.count];
  for (const auto& e : table) {
    if (words_at[e.count] >= kPlateauSize) return e.rank;
  }
  return table.back().rank;
}

LuhnCutoffs ComputeLuhnCutoffs(std::span<const RankEntry> table) {
  return LuhnCutoffs{1, ZipfR10(table)};
}

std::vector<RankEntry> LuhnExtract(const Document& doc, std::size_t max_words) {
  auto table = RankFrequencyTable(doc);
  const std::size_t keep = std::min(max_words, ZipfR10(table));
  table.resize(std::min(keep, table.size()));
  return table;
}

void WriteLuhnCsv(std::ostream& out, std::span<const RankEntry> candidates) {
  out << "bucket,word,score,rank,count\n";
  for (const auto& e : candidates) {
    out << "luhn," << e.word << ',' << e.count << ',' << e.rank << ',' << e.count << '\n';
  }
}

}  // namespace spatialkw
