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

#ifndef SPATIALKW_GAP_STATS_H_
#define SPATIALKW_GAP_STATS_H_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spatialkw/document.h"

namespace spatialkw {

// Successor-position difference between consecutive occurrences of a word,
// i.e. the number of other words in between plus one. Always >= 1.
using Gap = std::uint32_t;

// Moments of one word's gap distribution. Words that occur once have no gaps
// and no profile.
struct GapMoments {
  std::size_t ell = 0;          // occurrence count
  std::uint64_t gap_sum = 0;    // == last position - first position
  double c1 = 0.0;
  double c2 = 0.0;
  double c6 = 0.0;
};

struct GapProfile {
  std::string word;
  std::size_t ell = 0;
  std::vector<Gap> gaps;
  std::uint64_t gap_sum = 0;
  double c1 = 0.0;
  double c2 = 0.0;
  double c6 = 0.0;
  double tau = 0.0;  // spatial frequency 1 / c1
  double f = 0.0;    // ordinary frequency N_w / N
};

std::vector<Gap> GapsFromPositions(std::span<const Position> positions);

// Throws Error(kUndefinedStatistic) when the word occurs fewer than 2 times
// and Error(kNotFound) when it does not occur at all.
std::vector<Gap> GapSequence(const Document& doc, WordId id);
std::vector<Gap> GapSequence(const Document& doc, std::string_view word);

// (1 / len) * sum(gap^order). Sums are accumulated in 128-bit integers while
// they provably fit and in long double otherwise, so small inputs are exact.
// Throws Error(kUndefinedStatistic) on an empty gap list and Error(kDomain)
// for order < 1.
double Moment(std::span<const Gap> gaps, int order);

// C1, C2 and C6 straight from the occurrence index, without materializing
// the gap list. Throws Error(kUndefinedStatistic) when count < 2.
GapMoments ComputeMoments(std::span<const Position> positions);

GapProfile MakeGapProfile(const Document& doc, WordId id);
GapProfile MakeGapProfile(const Document& doc, std::string_view word);

double SpatialFrequency(const GapProfile& profile);

double OrdinaryFrequency(const Document& doc, WordId id);
double OrdinaryFrequency(const Document& doc, std::string_view word);

// Mean gap (1 - f) / f of the geometric distribution produced by a Bernoulli
// text model in which the word occurs independently with probability f.
// Throws Error(kDomain) unless 0 < f < 1.
double GeometricGapMean(double f);

struct RankEntry {
  WordId id = 0;
  std::string word;
  std::size_t count = 0;
  std::size_t rank = 0;  // 1-based
};

// Distinct words by descending count; ties in lexicographic byte order.
std::vector<RankEntry> RankFrequencyTable(const Document& doc);

struct StatsRecord {
  std::size_t rank = 0;
  std::string word;
  double f = 0.0;
  double tau = 0.0;
  double inv_c2 = 0.0;
  double inv_c2_perm = 0.0;
  double f_over_1mf = 0.0;  // +inf when the whole text is one word
};

// One record per word occurring at least twice, in rank order. The permuted
// second moment comes from a single shuffle drawn with `seed`.
std::vector<StatsRecord> StatsDump(const Document& doc, std::uint64_t seed);

// Header: rank,word,f,tau,inv_c2,inv_c2_perm,f_over_1mf
void WriteStatsCsv(std::ostream& out, std::span<const StatsRecord> records);

// Fraction of the first `top_k` records (all if 0) for which
// f/(1-f) <= tau * (1 + tolerance).
double GeometricBoundFraction(std::span<const StatsRecord> records, double tolerance,
                              std::size_t top_k = 0);

}  // namespace spatialkw

#endif  // SPATIALKW_GAP_STATS_H_
