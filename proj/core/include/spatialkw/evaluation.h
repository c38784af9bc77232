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

#ifndef SPATIALKW_EVALUATION_H_
#define SPATIALKW_EVALUATION_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spatialkw {

// Words proposed by one extraction method and what an annotator made of them.
//   method_candidates  everything the method proposed
//   annotator_marked   candidates the annotator accepted as keywords
//   annotator_full     the annotator's final keyword list for the text
// Long-text protocol: marked is a subset of both candidates and full.
// Short-text protocol: only candidates and full are used (full = gold list).
struct AnnotationSet {
  std::vector<std::string> method_candidates;
  std::vector<std::string> annotator_marked;
  std::vector<std::string> annotator_full;

  // Throws Error(kValidation) if marked is not contained in candidates and
  // in full.
  void ValidateContainment() const;
};

struct PrecisionRecall {
  double precision = 0.0;
  double recall = 0.0;
};

// Short mode:  Pre = |full & candidates| / |candidates|,
//              Rec = |full & candidates| / |full|.
// Long mode:   Pre = |marked| / |candidates|, Rec = |marked| / |full|.
// Sets are taken over distinct words. Throws Error(kUndefinedMetric) when a
// denominator is empty.
PrecisionRecall ComputePrecisionRecall(const AnnotationSet& sets, bool long_text_mode);

// Harmonic mean; 0 when pre + rec == 0 (see F1Degenerate).
double F1(double precision, double recall);
bool F1Degenerate(double precision, double recall);

enum class Label { kKeyword, kNonKeyword };

// 2x2 agreement table between annotators A (rows) and B (columns).
struct Contingency {
  std::size_t both_keyword = 0;       // A=k,  B=k
  std::size_t only_a_keyword = 0;     // A=k,  B=nk
  std::size_t only_b_keyword = 0;     // A=nk, B=k
  std::size_t both_non_keyword = 0;   // A=nk, B=nk

  std::size_t total() const {
    return both_keyword + only_a_keyword + only_b_keyword + both_non_keyword;
  }
};

using Labeling = std::map<std::string, Label>;

// Throws Error(kValidation) unless both labelings cover the same non-empty
// word set.
Contingency BuildContingency(const Labeling& a, const Labeling& b);

// kappa = (p_o - p_e) / (1 - p_e). Returns 1 when p_e = p_o = 1; throws
// Error(kUndefinedMetric) when p_e = 1 but p_o < 1, or the table is empty.
double CohensKappa(const Contingency& table);
double CohensKappa(const Labeling& a, const Labeling& b);

// "none" (< 0), "slight" [0, 0.2), "fair" [0.2, 0.4), "moderate" [0.4, 0.6),
// "substantial" [0.6, 1]. Cut points belong to the higher band.
std::string_view KappaBand(double kappa);

// Mean number of Unicode letters per word. Throws Error(kUndefinedMetric) for
// an empty list.
double MeanWordLength(std::span<const std::string> words);

struct EvalResult {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::optional<double> kappa;
  double mean_letters = 0.0;
  std::vector<std::string> warnings;
};

EvalResult Evaluate(const AnnotationSet& sets, bool long_text_mode);

}  // namespace spatialkw

#endif  // SPATIALKW_EVALUATION_H_
