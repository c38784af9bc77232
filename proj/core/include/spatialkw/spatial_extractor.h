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

#ifndef SPATIALKW_SPATIAL_EXTRACTOR_H_
#define SPATIALKW_SPATIAL_EXTRACTOR_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spatialkw/document.h"
#include "spatialkw/permutation.h"

namespace spatialkw {

// Cut points on the permutation ratios. Long texts use A = C2_perm / C2,
// short texts use A6 = C6_perm / C6.
struct Thresholds {
  double strong_global_max = 1.0 / 5.0;
  double weak_global_max = 1.0 / 3.0;
  double local_min = 5.0;
  double short_global_max = 1.0 / 3.0;
  double short_local_min = 3.0;
  std::size_t long_text_min_tokens = 70000;

  // Throws Error(kConfig) unless
  // 0 < strong_global_max < weak_global_max < 1 < local_min and
  // 0 < short_global_max < 1 < short_local_min.
  void Validate() const;
};

enum class TextMode { kLong, kShort };

std::string_view TextModeName(TextMode mode);

struct KeywordEntry {
  std::string word;
  double score = 0.0;        // A (long mode) or A6 (short mode)
  std::size_t rank = 0;      // frequency rank, 1 = most frequent
  std::size_t count = 0;     // N_w
  double moment = 0.0;       // C2 or C6 on the original text
  double moment_perm = 0.0;  // the permuted counterpart
};

struct KeywordReport {
  TextMode mode = TextMode::kLong;
  std::uint64_t seed = 0;
  std::size_t realizations = 1;
  Thresholds thresholds;
  // Each list is ordered by descending count, then by frequency rank.
  std::vector<KeywordEntry> strong_global;
  std::vector<KeywordEntry> weak_global;  // always empty in short mode
  std::vector<KeywordEntry> local;

  std::size_t size() const {
    return strong_global.size() + weak_global.size() + local.size();
  }
  // Every reported word: strong global, then weak global, then local.
  std::vector<std::string> Words() const;
};

// Long iff the (post-stop-word) token count reaches long_text_min_tokens.
TextMode SelectMode(const Document& doc, const Thresholds& thresholds);

// Strong global: A <= strong_global_max. Weak global:
// strong_global_max < A <= weak_global_max. Local: A >= local_min.
KeywordReport ClassifyLong(const Document& doc, const Thresholds& thresholds,
                           std::uint64_t seed, std::size_t realizations = 1);

// Global (reported as strong_global): A6 <= short_global_max.
// Local: A6 >= short_local_min.
KeywordReport ClassifyShort(const Document& doc, const Thresholds& thresholds,
                            std::uint64_t seed, std::size_t realizations = 1);

// Buckets precomputed scores; `scores` must come from ScoreAll(doc, ...).
KeywordReport ClassifyScores(const Document& doc,
                             std::span<const PermutationScore> scores, TextMode mode,
                             const Thresholds& thresholds);

// Picks the mode with SelectMode unless `forced` is set, then classifies.
KeywordReport Extract(const Document& doc, const Thresholds& thresholds,
                      std::uint64_t seed, std::size_t realizations = 1,
                      std::optional<TextMode> forced = std::nullopt);

// Flat CSV with a bucket column: bucket,word,score,rank,count
void WriteKeywordCsv(std::ostream& out, const KeywordReport& report);

enum class ExtremumKind { kMax, kMin };

std::string_view ExtremumKindName(ExtremumKind kind);

struct Extremum {
  std::size_t index = 0;
  ExtremumKind kind = ExtremumKind::kMax;
};

// Interior indices whose value is strictly above (max) or strictly below
// (min) both neighbours.
std::vector<Extremum> StrictLocalExtrema(std::span<const double> values);

struct ExtremumEntry {
  std::string word;
  std::size_t rank = 0;
  double a = 0.0;
  ExtremumKind kind = ExtremumKind::kMax;
};

// Strict local extrema of A along the frequency-rank ordering of the words
// that occur at least twice. Fewer than three such words yield no extrema.
std::vector<ExtremumEntry> LocalExtremaDiagnostic(const Document& doc, std::uint64_t seed,
                                                  std::size_t realizations = 1);

}  // namespace spatialkw

#endif  // SPATIALKW_SPATIAL_EXTRACTOR_H_
