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

#ifndef SPATIALKW_TOOLS_CLI_IO_H_
#define SPATIALKW_TOOLS_CLI_IO_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "spatialkw/chapter_extractor.h"
#include "spatialkw/evaluation.h"
#include "spatialkw/gap_stats.h"
#include "spatialkw/spatial_extractor.h"

namespace spatialkw::cli {

struct RunConfig;

// Throws Error(kIo).
std::string ReadFile(const std::string& path);

nlohmann::json ToJson(const Thresholds& thresholds);
nlohmann::json ToJson(const RunConfig& config);
nlohmann::json ToJson(const KeywordReport& report);
nlohmann::json ToJson(const EvalResult& result);
nlohmann::json LuhnToJson(std::span<const RankEntry> candidates, std::size_t r_max);
nlohmann::json ChaptersToJson(std::span<const ChapterScoreEntry> rows);
nlohmann::json StatsToJson(std::span<const StatsRecord> records);

// {candidates:[...], marked:[...], full:[...]}; every key optional, words
// normalized like tokens. Throws Error(kSchema) on anything else.
AnnotationSet ParseAnnotationJson(std::string_view text);

// Candidate words from an extraction result: JSON written by `extract` or
// `baseline`, CSV with a `word` column, or a plain one-word-per-line list.
std::vector<std::string> ParseCandidates(std::string_view text);

// Two-column CSV word,label; label is k/nk (also keyword/non-keyword, 1/0,
// yes/no). An optional header row and '#' comment lines are skipped.
Labeling ParseLabelCsv(std::string_view text);

}  // namespace spatialkw::cli

#endif  // SPATIALKW_TOOLS_CLI_IO_H_
