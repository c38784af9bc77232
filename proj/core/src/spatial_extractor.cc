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

#include "spatialkw/spatial_extractor.h"

#include <algorithm>
#include <iomanip>
#include <unordered_map>

#include "spatialkw/error.h"
#include "spatialkw/gap_stats.h"

namespace spatialkw {

void Thresholds::Validate() const {
  if (!(strong_global_max > 0.0 && strong_global_max < weak_global_max &&
        weak_global_max < 1.0 && local_min > 1.0)) {
    throw Error(ErrorKind::kConfig,
                "long-text thresholds must satisfy 0 < strong_global_max < "
                "weak_global_max < 1 < local_min");
  }
  if (!(short_global_max > 0.0 && short_global_max < 1.0 && short_local_min > 1.0)) {
    throw Error(ErrorKind::kConfig,
                "short-text thresholds must satisfy 0 < short_global_max < 1 < "
                "short_local_min");
  }
}

std::string_view TextModeName(TextMode mode) {
  return mode == TextMode::kLong ? "long" : "short";
}

std::vector<std::string> KeywordReport::Words() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (const auto* list : {&strong_global, &weak_global, &local}) {
    for (const auto& e : *list) out.push_back(e.word);
  }
  return out;
}

TextMode SelectMode(const Document& doc, const Thresholds& thresholds) {
  return doc.size() >= thresholds.long_text_min_tokens ? TextMode::kLong
                                                        : TextMode::kShort;
}

KeywordReport ClassifyScores(const Document& doc,
                             std::span<const PermutationScore> scores, TextMode mode,
                             const Thresholds& thresholds) {
  thresholds.Validate();
  KeywordReport report;
  report.mode = mode;
  report.thresholds = thresholds;
  if (!scores.empty()) {
    report.seed = scores.front().seed;
    report.realizations = scores.front().realizations;
  }

  std::unordered_map<WordId, std::size_t> rank_of;
  for (const auto& entry : RankFrequencyTable(doc)) rank_of.emplace(entry.id, entry.rank);

  for (const auto& s : scores) {
    KeywordEntry e;
    e.word = s.word;
    e.rank = rank_of.at(s.id);
    e.count = s.count;
    if (mode == TextMode::kLong) {
      e.score = s.a;
      e.moment = s.c2;
      e.moment_perm = s.c2_perm;
      if (e.score <= thresholds.strong_global_max) {
        report.strong_global.push_back(std::move(e));
      } else if (e.score <= thresholds.weak_global_max) {
        report.weak_global.push_back(std::move(e));
      } else if (e.score >= thresholds.local_min) {
        report.local.push_back(std::move(e));
      }
    } else {
      e.score = s.a6;
      e.moment = s.c6;
      e.moment_perm = s.c6_perm;
      if (e.score <= thresholds.short_global_max) {
        report.strong_global.push_back(std::move(e));
      } else if (e.score >= thresholds.short_local_min) {
        report.local.push_back(std::move(e));
      }
    }
  }

  auto by_frequency = [](const KeywordEntry& a, const KeywordEntry& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.rank < b.rank;
  };
  std::sort(report.strong_global.begin(), report.strong_global.end(), by_frequency);
  std::sort(report.weak_global.begin(), report.weak_global.end(), by_frequency);
  std::sort(report.local.begin(), report.local.end(), by_frequency);
  return report;
}

KeywordReport ClassifyLong(const Document& doc, const Thresholds& thresholds,
                           std::uint64_t seed, std::size_t realizations) {
  thresholds.Validate();
  KeywordReport r = ClassifyScores(doc, ScoreAll(doc, seed, realizations),
                                   TextMode::kLong, thresholds);
  r.seed = seed;
  r.realizations = realizations;
  return r;
}

KeywordReport ClassifyShort(const Document& doc, const Thresholds& thresholds,
                            std::uint64_t seed, std::size_t realizations) {
  thresholds.Validate();
  KeywordReport r = ClassifyScores(doc, ScoreAll(doc, seed, realizations),
                                   TextMode::kShort, thresholds);
  r.seed = seed;
  r.realizations = realizations;
  return r;
}

KeywordReport Extract(const Document& doc, const Thresholds& thresholds,
                      std::uint64_t seed, std::size_t realizations,
                      std::optional<TextMode> forced) {
  const TextMode mode = forced.value_or(SelectMode(doc, thresholds));
  return mode == TextMode::kLong ? ClassifyLong(doc, thresholds, seed, realizations)
                                 : ClassifyShort(doc, thresholds, seed, realizations);
}

void WriteKeywordCsv(std::ostream& out, const KeywordReport& report) {
  const auto precision = out.precision();
  out << std::setprecision(10);
  out << "bucket,word,score,rank,count\n";
  auto rows = [&](std::string_view bucket, const std::vector<KeywordEntry>& list) {
    for (const auto& e : list) {
      out << bucket << ',' << e.word << ',' << e.score << ',' << e.rank << ','
          << e.count << '\n';
    }
  };
  rows("strong_global", report.strong_global);
  rows("weak_global", report.weak_global);
  rows("local", report.local);
  out.precision(precision);
}

std::string_view ExtremumKindName(ExtremumKind kind) {
  return kind == ExtremumKind::kMax ? "max" : "min";
}

std::vector<Extremum> StrictLocalExtrema(std::span<const double> values) {
  std::vector<Extremum> out;
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    const double prev = values[i - 1];
    const double here = values[i];
    const double next = values[i + 1];
    if (here > prev && here > next) {
      out.push_back({i, ExtremumKind::kMax});
    } else if (here < prev && here < next) {
      out.push_back({i, ExtremumKind::kMin});
    }
  }
  return out;
}

std::vector<ExtremumEntry> LocalExtremaDiagnostic(const Document& doc, std::uint64_t seed,
                                                  std::size_t realizations) {
  const auto scores = ScoreAll(doc, seed, realizations);
  std::unordered_map<WordId, const PermutationScore*> by_id;
  for (const auto& s : scores) by_id.emplace(s.id, &s);

  std::vector<const PermutationScore*> ordered;
  std::vector<std::size_t> ranks;
  for (const auto& entry : RankFrequencyTable(doc)) {
    if (auto it = by_id.find(entry.id); it != by_id.end()) {
      ordered.push_back(it->second);
      ranks.push_back(entry.rank);
    }
  }
  std::vector<double> a;
  a.reserve(ordered.size());
  for (const auto* s : ordered) a.push_back(s->a);

  std::vector<ExtremumEntry> out;
  for (const auto& ext : StrictLocalExtrema(a)) {
    out.push_back({ordered[ext.index]->word, ranks[ext.index], a[ext.index], ext.kind});
  }
  return out;
}

}  // namespace spatialkw
