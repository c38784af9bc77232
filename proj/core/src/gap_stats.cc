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

#include "spatialkw/gap_stats.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>

#include "spatialkw/error.h"
#include "spatialkw/permutation.h"

namespace spatialkw {
namespace {

__extension__ typedef unsigned __int128 u128;

void RequireRepeated(const Document& doc, WordId id) {
  if (doc.count(id) < 2) {
    throw Error(ErrorKind::kUndefinedStatistic,
                "gap statistics need at least two occurrences of '" +
                    std::string(doc.word(id)) + "'");
  }
}

// True when len * max_gap^order is below 2^127.
bool FitsInteger(std::size_t len, Gap max_gap, int order) {
  const double bits = std::log2(static_cast<double>(len)) +
                      order * std::log2(static_cast<double>(std::max<Gap>(max_gap, 1)));
  return bits < 126.0;
}

}  // namespace

std::vector<Gap> GapsFromPositions(std::span<const Position> positions) {
  std::vector<Gap> gaps;
  if (positions.size() < 2) return gaps;
  gaps.reserve(positions.size() - 1);
  for (std::size_t i = 1; i < positions.size(); ++i) {
    gaps.push_back(positions[i] - positions[i - 1]);
  }
  return gaps;
}

std::vector<Gap> GapSequence(const Document& doc, WordId id) {
  RequireRepeated(doc, id);
  return GapsFromPositions(doc.positions(id));
}

std::vector<Gap> GapSequence(const Document& doc, std::string_view word) {
  return GapSequence(doc, doc.IdOf(word));
}

double Moment(std::span<const Gap> gaps, int order) {
  if (gaps.empty()) {
    throw Error(ErrorKind::kUndefinedStatistic, "moment of an empty gap list");
  }
  if (order < 1) throw Error(ErrorKind::kDomain, "moment order must be >= 1");
  const Gap max_gap = *std::max_element(gaps.begin(), gaps.end());
  const auto len = static_cast<long double>(gaps.size());
  if (FitsInteger(gaps.size(), max_gap, order)) {
    u128 sum = 0;
    for (Gap g : gaps) {
      u128 p = 1;
      for (int k = 0; k < order; ++k) p *= g;
      sum += p;
    }
    return static_cast<double>(static_cast<long double>(sum) / len);
  }
  long double sum = 0.0L;
  for (Gap g : gaps) sum += std::pow(static_cast<long double>(g), order);
  return static_cast<double>(sum / len);
}

GapMoments ComputeMoments(std::span<const Position> positions) {
  if (positions.size() < 2) {
    throw Error(ErrorKind::kUndefinedStatistic,
                "gap moments need at least two occurrences");
  }
  const auto gaps = GapsFromPositions(positions);
  GapMoments m;
  m.ell = positions.size();
  m.gap_sum = positions.back() - positions.front();
  m.c1 = static_cast<double>(m.gap_sum) / static_cast<double>(gaps.size());
  m.c2 = Moment(gaps, 2);
  m.c6 = Moment(gaps, 6);
  return m;
}

GapProfile MakeGapProfile(const Document& doc, WordId id) {
  RequireRepeated(doc, id);
  const GapMoments m = ComputeMoments(doc.positions(id));
  GapProfile p;
  p.word = std::string(doc.word(id));
  p.ell = m.ell;
  p.gaps = GapsFromPositions(doc.positions(id));
  p.gap_sum = m.gap_sum;
  p.c1 = m.c1;
  p.c2 = m.c2;
  p.c6 = m.c6;
  p.tau = 1.0 / m.c1;
  p.f = OrdinaryFrequency(doc, id);
  return p;
}

GapProfile MakeGapProfile(const Document& doc, std::string_view word) {
  return MakeGapProfile(doc, doc.IdOf(word));
}

double SpatialFrequency(const GapProfile& profile) { return 1.0 / profile.c1; }

double OrdinaryFrequency(const Document& doc, WordId id) {
  return static_cast<double>(doc.count(id)) / static_cast<double>(doc.size());
}

double OrdinaryFrequency(const Document& doc, std::string_view word) {
  return OrdinaryFrequency(doc, doc.IdOf(word));
}

double GeometricGapMean(double f) {
  if (!(f > 0.0 && f < 1.0)) {
    throw Error(ErrorKind::kDomain, "geometric gap mean needs 0 < f < 1");
  }
  return (1.0 - f) / f;
}

std::vector<RankEntry> RankFrequencyTable(const Document& doc) {
  std::vector<RankEntry> table;
  table.reserve(doc.vocabulary_size());
  for (WordId id = 0; id < doc.vocabulary_size(); ++id) {
    table.push_back({id, std::string(doc.word(id)), doc.count(id), 0});
  }
  std::sort(table.begin(), table.end(), [](const RankEntry& a, const RankEntry& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.word < b.word;
  });
  for (std::size_t i = 0; i < table.size(); ++i) table[i].rank = i + 1;
  return table;
}

std::vector<StatsRecord> StatsDump(const Document& doc, std::uint64_t seed) {
  std::vector<StatsRecord> records;
  if (doc.empty()) return records;
  const Document shuffled = Permute(doc, seed);
  for (const auto& entry : RankFrequencyTable(doc)) {
    if (entry.count < 2) continue;
    const GapMoments m = ComputeMoments(doc.positions(entry.id));
    const GapMoments p = ComputeMoments(shuffled.positions(entry.id));
    const double f = OrdinaryFrequency(doc, entry.id);
    StatsRecord r;
    r.rank = entry.rank;
    r.word = entry.word;
    r.f = f;
    r.tau = 1.0 / m.c1;
    r.inv_c2 = 1.0 / m.c2;
    r.inv_c2_perm = 1.0 / p.c2;
    r.f_over_1mf = f < 1.0 ? f / (1.0 - f) : std::numeric_limits<double>::infinity();
    records.push_back(std::move(r));
  }
  return records;
}

void WriteStatsCsv(std::ostream& out, std::span<const StatsRecord> records) {
  out << "rank,word,f,tau,inv_c2,inv_c2_perm,f_over_1mf\n";
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(10);
  for (const auto& r : records) {
    out << r.rank << ',' << r.word << ',' << r.f << ',' << r.tau << ',' << r.inv_c2 << ','
        << r.inv_c2_perm << ',' << r.f_over_1mf << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

double GeometricBoundFraction(std::span<const StatsRecord> records, double tolerance,
                              std::size_t top_k) {
  const std::size_t n = top_k == 0 ? records.size() : std::min(top_k, records.size());
  if (n == 0) return 0.0;
  std::size_t hold = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (records[i].f_over_1mf <= records[i].tau * (1.0 + tolerance)) ++hold;
  }
  return static_cast<double>(hold) / static_cast<double>(n);
}

}  // namespace spatialkw
