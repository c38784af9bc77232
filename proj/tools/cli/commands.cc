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

#include "cli/commands.h"

#include <optional>

#include "cli/io.h"
#include "spatialkw/chapter_extractor.h"
#include "spatialkw/chapters.h"
#include "spatialkw/document.h"
#include "spatialkw/evaluation.h"
#include "spatialkw/gap_stats.h"
#include "spatialkw/luhn.h"
#include "spatialkw/stopwords.h"
#include "spatialkw/tokenizer.h"

namespace spatialkw::cli {
namespace {

using nlohmann::json;

template <typename Fn>
auto Stage(const char* name, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw StageError(name, e);
  }
}

[[noreturn]] void Fail(const char* stage, ErrorKind kind, const std::string& message) {
  throw StageError(stage, Error(kind, message));
}

bool WantCsv(const RunConfig& config) {
  if (config.format == "csv") return true;
  if (config.format == "json") return false;
  Fail("config", ErrorKind::kConfig, "unknown format '" + config.format + "' (json|csv)");
}

std::optional<TextMode> ForcedMode(const RunConfig& config) {
  if (config.mode == "auto") return std::nullopt;
  if (config.mode == "long") return TextMode::kLong;
  if (config.mode == "short") return TextMode::kShort;
  Fail("config", ErrorKind::kConfig, "unknown mode '" + config.mode + "' (auto|long|short)");
}

TokenizerConfig MakeTokenizerConfig(const RunConfig& config) {
  TokenizerConfig tc;
  tc.lowercase = config.lowercase;
  tc.min_token_length = config.min_token_length;
  if (config.stopwords == "en") {
    tc.stopwords = EnglishStopwords();
  } else if (config.stopwords != "none" && !config.stopwords.empty()) {
    tc.stopwords = LoadStopwords(config.stopwords, config.lowercase);
  }
  ValidateTokenizerConfig(tc);
  return tc;
}

Document LoadDocument(const RunConfig& config) {
  if (config.input.empty()) Fail("read", ErrorKind::kConfig, "--input is required");
  const std::string raw = Stage("read", [&] { return ReadFile(config.input); });
  const TokenizerConfig tc = Stage("tokenize", [&] { return MakeTokenizerConfig(config); });
  std::optional<ChapterPattern> pattern;
  if (!config.chapter_pattern.empty()) {
    pattern = Stage("chapters", [&] { return ChapterPattern::Parse(config.chapter_pattern); });
  }
  IngestedText text = Stage("tokenize", [&] {
    return IngestText(raw, tc, pattern ? &*pattern : nullptr);
  });
  return Stage("document",
               [&] { return Document::Build(text.tokens, text.chapter_breaks); });
}

void EmitJson(const RunConfig& config, json payload, std::ostream& out) {
  payload["config"] = ToJson(config);
  out << payload.dump(2) << '\n';
}

void EmitCsvProvenance(const RunConfig& config, std::ostream& out) {
  out << "# spatialkw " << ToJson(config).dump() << '\n';
}

}  // namespace

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kConfig:
      return 2;
    case ErrorKind::kIo:
      return 3;
    case ErrorKind::kDecode:
      return 4;
    case ErrorKind::kSchema:
    case ErrorKind::kValidation:
      return 5;
    case ErrorKind::kUnsupportedDocument:
      return 6;
    default:
      return 1;
  }
}

void RunExtract(const RunConfig& config, std::ostream& out) {
  const bool csv = WantCsv(config);
  const auto forced = ForcedMode(config);
  Stage("config", [&] { config.thresholds.Validate(); });
  const Document doc = LoadDocument(config);
  const KeywordReport report = Stage("extract", [&] {
    return Extract(doc, config.thresholds, config.seed, config.realizations, forced);
  });
  if (csv) {
    EmitCsvProvenance(config, out);
    WriteKeywordCsv(out, report);
    return;
  }
  json j = ToJson(report);
  j["tokens"] = doc.size();
  EmitJson(config, std::move(j), out);
}

void RunBaseline(const RunConfig& config, std::ostream& out) {
  const bool csv = WantCsv(config);
  const Document doc = LoadDocument(config);
  const auto table = RankFrequencyTable(doc);
  const std::size_t r10 = ZipfR10(table);
  const auto candidates = LuhnExtract(doc, config.max_words);
  if (csv) {
    EmitCsvProvenance(config, out);
    WriteLuhnCsv(out, candidates);
    return;
  }
  json j = LuhnToJson(candidates, r10);
  j["tokens"] = doc.size();
  EmitJson(config, std::move(j), out);
}

void RunChapters(const RunConfig& config, std::ostream& out) {
  const bool csv = WantCsv(config);
  if (config.chapter_pattern.empty()) {
    Fail("chapters", ErrorKind::kUnsupportedDocument,
         "no chapter pattern given (--chapter-pattern)");
  }
  const Document doc = LoadDocument(config);
  if (!doc.has_chapters()) {
    Fail("chapters", ErrorKind::kUnsupportedDocument,
         "chapter pattern '" + config.chapter_pattern + "' matched no chapter breaks");
  }
  const auto rows = Stage("chapters", [&] { return TopByChapterScore(doc, config.top_n); });
  if (csv) {
    EmitCsvProvenance(config, out);
    WriteChapterCsv(out, rows);
    return;
  }
  EmitJson(config,
           {{"chapters", doc.chapter_count()},
            {"tokens", doc.size()},
            {"top_n", config.top_n},
            {"rows", ChaptersToJson(rows)}},
           out);
}

void RunStats(const RunConfig& config, std::ostream& out) {
  const bool csv = WantCsv(config);
  const Document doc = LoadDocument(config);
  const auto records = Stage("stats", [&] { return StatsDump(doc, config.seed); });
  if (csv) {
    EmitCsvProvenance(config, out);
    WriteStatsCsv(out, records);
    return;
  }
  EmitJson(config,
           {{"tokens", doc.size()},
            {"seed", config.seed},
            {"generator_name", std::string(kGeneratorName)},
            {"geometric_bound_fraction", GeometricBoundFraction(records, 0.0)},
            {"records", StatsToJson(records)}},
           out);
}

namespace {

std::optional<double> KappaFromFiles(const RunConfig& config) {
  if (config.labels_a.empty() && config.labels_b.empty()) return std::nullopt;
  if (config.labels_a.empty() || config.labels_b.empty()) {
    Fail("config", ErrorKind::kConfig, "kappa needs both --labels-a and --labels-b");
  }
  const Labeling a = Stage("read", [&] { return ParseLabelCsv(ReadFile(config.labels_a)); });
  const Labeling b = Stage("read", [&] { return ParseLabelCsv(ReadFile(config.labels_b)); });
  return Stage("kappa", [&] { return CohensKappa(a, b); });
}

}  // namespace

void RunEval(const RunConfig& config, std::ostream& out) {
  const bool csv = WantCsv(config);
  if (config.annotation.empty()) Fail("read", ErrorKind::kConfig, "--annotation is required");
  AnnotationSet sets =
      Stage("read", [&] { return ParseAnnotationJson(ReadFile(config.annotation)); });
  if (!config.extraction.empty()) {
    sets.method_candidates =
        Stage("read", [&] { return ParseCandidates(ReadFile(config.extraction)); });
  }
  bool long_mode;
  if (config.mode == "long") {
    long_mode = true;
  } else if (config.mode == "short") {
    long_mode = false;
  } else if (config.mode == "auto") {
    long_mode = !sets.annotator_marked.empty();
  } else {
    Fail("config", ErrorKind::kConfig, "unknown mode '" + config.mode + "' (auto|long|short)");
  }
  EvalResult result = Stage("eval", [&] { return Evaluate(sets, long_mode); });
  result.kappa = KappaFromFiles(config);

  if (csv) {
    EmitCsvProvenance(config, out);
    out << "metric,value\n";
    out << "precision," << result.precision << '\n';
    out << "recall," << result.recall << '\n';
    out << "f1," << result.f1 << '\n';
    if (result.kappa) out << "kappa," << *result.kappa << '\n';
    out << "mean_letters," << result.mean_letters << '\n';
    return;
  }
  json j = ToJson(result);
  j["protocol"] = long_mode ? "long" : "short";
  j["candidates"] = sets.method_candidates.size();
  EmitJson(config, std::move(j), out);
}

void RunKappa(const RunConfig& config, std::ostream& out) {
  const bool csv = WantCsv(config);
  if (config.labels_a.empty() || config.labels_b.empty()) {
    Fail("config", ErrorKind::kConfig, "kappa needs both --labels-a and --labels-b");
  }
  const Labeling a = Stage("read", [&] { return ParseLabelCsv(ReadFile(config.labels_a)); });
  const Labeling b = Stage("read", [&] { return ParseLabelCsv(ReadFile(config.labels_b)); });
  const Contingency table = Stage("kappa", [&] { return BuildContingency(a, b); });
  const double kappa = Stage("kappa", [&] { return CohensKappa(table); });
  if (csv) {
    EmitCsvProvenance(config, out);
    out << "metric,value\n";
    out << "kappa," << kappa << '\n';
    out << "band," << KappaBand(kappa) << '\n';
    out << "words," << table.total() << '\n';
    return;
  }
  EmitJson(config,
           {{"kappa", kappa},
            {"band", std::string(KappaBand(kappa))},
            {"words", table.total()},
            {"contingency",
             {{"both_keyword", table.both_keyword},
              {"only_a_keyword", table.only_a_keyword},
              {"only_b_keyword", table.only_b_keyword},
              {"both_non_keyword", table.both_non_keyword}}}},
           out);
}

void RunCommand(const RunConfig& config, std::ostream& out) {
  if (config.command == "extract") return RunExtract(config, out);
  if (config.command == "baseline") return RunBaseline(config, out);
  if (config.command == "chapters") return RunChapters(config, out);
  if (config.command == "stats") return RunStats(config, out);
  if (config.command == "eval") return RunEval(config, out);
  if (config.command == "kappa") return RunKappa(config, out);
  Fail("config", ErrorKind::kConfig, "unknown command '" + config.command + "'");
}

}  // namespace spatialkw::cli
