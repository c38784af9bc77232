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

#include "spatialkw/evaluation.h"

#include <set>

#include "spatialkw/error.h"
#include "spatialkw/tokenizer.h"

namespace spatialkw {
namespace {

std::set<std::string> Distinct(const std::vector<std::string>& words) {
  return {words.begin(), words.end()};
}

double Ratio(std::size_t num, std::size_t den, std::string_view what) {
  if (den == 0) {
    throw Error(ErrorKind::kUndefinedMetric, std::string(what) + " has an empty denominator");
  }
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

void AnnotationSet::ValidateContainment() const {
  const auto candidates = Distinct(method_candidates);
  const auto full = Distinct(annotator_full);
  for (const auto& w : annotator_marked) {
    if (!candidates.contains(w)) {
      throw Error(ErrorKind::kValidation,
                  "marked keyword '" + w + "' is not among the method candidates");
    }
    if (!full.contains(w)) {
      throw Error(ErrorKind::kValidation,
                  "marked keyword '" + w + "' is missing from the annotator's full list");
    }
  }
}

PrecisionRecall ComputePrecisionRecall(const AnnotationSet& sets, bool long_text_mode) {
  const auto candidates = Distinct(sets.method_candidates);
  const auto full = Distinct(sets.annotator_full);
  PrecisionRecall pr;
  if (long_text_mode) {
    sets.ValidateContainment();
    const auto marked = Distinct(sets.annotator_marked);
    pr.precision = Ratio(marked.size(), candidates.size(), "precision");
    pr.recall = Ratio(marked.size(), full.size(), "recall");
  } else {
    std::size_t hits = 0;
    for (const auto& w : candidates) hits += full.contains(w) ? 1 : 0;
    pr.precision = Ratio(hits, candidates.size(), "precision");
    pr.recall = Ratio(hits, full.size(), "recall");
  }
  return pr;
}

bool F1Degenerate(double precision, double recall) { return precision + recall <= 0.0; }

double F1(double precision, double recall) {
  if (F1Degenerate(precision, recall)) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

Contingency BuildContingency(const Labeling& a, const Labeling& b) {
  if (a.empty()) throw Error(ErrorKind::kValidation, "empty labeling");
  if (a.size() != b.size()) {
    throw Error(ErrorKind::kValidation, "annotators labeled different word sets");
  }
  Contingency t;
  for (const auto& [word, la] : a) {
    auto it = b.find(word);
    if (it == b.end()) {
      throw Error(ErrorKind::kValidation, "word '" + word + "' labeled by only one annotator");
    }
    const Label lb = it->second;
    if (la == Label::kKeyword) {
      (lb == Label::kKeyword ? t.both_keyword : t.only_a_keyword)++;
    } else {
      (lb == Label::kKeyword ? t.only_b_keyword : t.both_non_keyword)++;
    }
  }
  return t;
}

double CohensKappa(const Contingency& t) {
  const auto n = static_cast<double>(t.total());
  if (t.total() == 0) throw Error(ErrorKind::kUndefinedMetric, "kappa of an empty table");
  const double p_o = static_cast<double>(t.both_keyword + t.both_non_keyword) / n;
  const double a_k = static_cast<double>(t.both_keyword + t.only_a_keyword) / n;
  const double b_k = static_cast<double>(t.both_keyword + t.only_b_keyword) / n;
  const double p_e = a_k * b_k + (1.0 - a_k) * (1.0 - b_k);
  if (p_e >= 1.0) {
    if (p_o >= 1.0) return 1.0;
    throw Error(ErrorKind::kUndefinedMetric, "kappa undefined: chance agreement is 1");
  }
  return (p_o - p_e) / (1.0 - p_e);
}

double CohensKappa(const Labeling& a, const Labeling& b) {
  return CohensKappa(BuildContingency(a, b));
}

std::string_view KappaBand(double kappa) {
  if (kappa < 0.0) return "none";
  if (kappa < 0.2) return "slight";
  if (kappa < 0.4) return "fair";
  if (kappa < 0.6) return "moderate";
  return "substantial";
}

double MeanWordLength(std::span<const std::string> words) {
  if (words.empty()) throw Error(ErrorKind::kUndefinedMetric, "mean length of no words");
  std::size_t letters = 0;
  for (const auto& w : words) letters += CountLetters(w);
  return static_cast<double>(letters) / static_cast<double>(words.size());
}

EvalResult Evaluate(const AnnotationSet& sets, bool long_text_mode) {
  EvalResult r;
  const PrecisionRecall pr = ComputePrecisionRecall(sets, long_text_mode);
  r.precision = pr.precision;
  r.recall = pr.recall;
  r.f1 = F1(pr.precision, pr.recall);
  if (F1Degenerate(pr.precision, pr.recall)) {
    r.warnings.emplace_back("precision and recall are both 0; F1 reported as 0");
  }
  r.mean_letters = MeanWordLength(sets.method_candidates);
  return r;
}

}  // namespace spatialkw
