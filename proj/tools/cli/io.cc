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

#include "cli/io.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "cli/commands.h"
#include "spatialkw/error.h"
#include "spatialkw/permutation.h"
#include "spatialkw/tokenizer.h"

namespace spatialkw::cli {
namespace {

using nlohmann::json;

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string> SplitCsv(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    auto comma = line.find(',', start);
    cells.emplace_back(Trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

// JSON cannot carry infinities; they are written as null.
json Number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json Entries(const std::vector<KeywordEntry>& list) {
  json arr = json::array();
  for (const auto& e : list) {
    arr.push_back({{"word", e.word},
                   {"score", Number(e.score)},
                   {"rank", e.rank},
                   {"count", e.count},
                   {"moment", Number(e.moment)},
                   {"moment_perm", Number(e.moment_perm)}});
  }
  return arr;
}

std::vector<std::string> WordList(const json& value, std::string_view key) {
  if (!value.is_array()) {
    throw Error(ErrorKind::kSchema, "'" + std::string(key) + "' must be an array");
  }
  std::vector<std::string> words;
  for (const auto& item : value) {
    std::string raw;
    if (item.is_string()) {
      raw = item.get<std::string>();
    } else if (item.is_object() && item.contains("word") && item["word"].is_string()) {
      raw = item["word"].get<std::string>();
    } else {
      throw Error(ErrorKind::kSchema, "entries of '" + std::string(key) +
                                          "' must be strings or {\"word\": ...} objects");
    }
    std::string word = NormalizeWord(raw);
    if (word.empty()) {
      throw Error(ErrorKind::kSchema, "entry '" + raw + "' has no letters");
    }
    words.push_back(std::move(word));
  }
  return words;
}

json ParseJson(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kSchema, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::kIo, "error reading " + path);
  return buf.str();
}

json ToJson(const Thresholds& t) {
  return {{"strong_global_max", t.strong_global_max},
          {"weak_global_max", t.weak_global_max},
          {"local_min", t.local_min},
          {"short_global_max", t.short_global_max},
          {"short_local_min", t.short_local_min},
          {"long_text_min_tokens", t.long_text_min_tokens}};
}

json ToJson(const RunConfig& c) {
  return {{"command", c.command},
          {"input", c.input},
          {"stopwords", c.stopwords},
          {"chapter_pattern", c.chapter_pattern},
          {"mode", c.mode},
          {"thresholds", ToJson(c.thresholds)},
          {"seed", c.seed},
          {"realizations", c.realizations},
          {"generator_name", std::string(kGeneratorName)},
          {"format", c.format},
          {"max_words", c.max_words},
          {"top_n", c.top_n},
          {"min_token_length", c.min_token_length},
          {"lowercase", c.lowercase},
          {"extraction", c.extraction},
          {"annotation", c.annotation},
          {"labels_a", c.labels_a},
          {"labels_b", c.labels_b}};
}

json ToJson(const KeywordReport& r) {
  return {{"mode", std::string(TextModeName(r.mode))},
          {"seed", r.seed},
          {"realizations", r.realizations},
          {"generator_name", std::string(kGeneratorName)},
          {"thresholds", ToJson(r.thresholds)},
          {"strong_global", Entries(r.strong_global)},
          {"weak_global", Entries(r.weak_global)},
          {"local", Entries(r.local)}};
}

json ToJson(const EvalResult& r) {
  json j = {{"precision", r.precision},
            {"recall", r.recall},
            {"f1", r.f1},
            {"mean_letters", r.mean_letters},
            {"warnings", r.warnings}};
  if (r.kappa) {
    j["kappa"] = *r.kappa;
    j["kappa_band"] = std::string(KappaBand(*r.kappa));
  }
  return j;
}

json LuhnToJson(std::span<const RankEntry> candidates, std::size_t r_max) {
  json arr = json::array();
  for (const auto& e : candidates) {
    arr.push_back({{"word", e.word}, {"score", e.count}, {"rank", e.rank}, {"count", e.count}});
  }
  return {{"mode", "luhn"}, {"r_min", 1}, {"r_max", r_max}, {"luhn", arr}};
}

json ChaptersToJson(std::span<const ChapterScoreEntry> rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"word", r.word},
                   {"score", r.score},
                   {"entropy_score", r.entropy_score},
                   {"count", r.count}});
  }
  return arr;
}

json StatsToJson(std::span<const StatsRecord> records) {
  json arr = json::array();
  for (const auto& r : records) {
    arr.push_back({{"rank", r.rank},
                   {"word", r.word},
                   {"f", r.f},
                   {"tau", r.tau},
                   {"inv_c2", r.inv_c2},
                   {"inv_c2_perm", r.inv_c2_perm},
                   {"f_over_1mf", Number(r.f_over_1mf)}});
  }
  return arr;
}

AnnotationSet ParseAnnotationJson(std::string_view text) {
  const json j = ParseJson(text);
  if (!j.is_object()) throw Error(ErrorKind::kSchema, "annotation file must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "candidates" && key != "marked" && key != "full") {
      throw Error(ErrorKind::kSchema, "unexpected annotation key '" + key + "'");
    }
  }
  AnnotationSet sets;
  if (j.contains("candidates")) sets.method_candidates = WordList(j["candidates"], "candidates");
  if (j.contains("marked")) sets.annotator_marked = WordList(j["marked"], "marked");
  if (j.contains("full")) sets.annotator_full = WordList(j["full"], "full");
  return sets;
}

std::vector<std::string> ParseCandidates(std::string_view text) {
  const std::string_view body = Trim(text);
  if (body.empty()) return {};
  if (body.front() == '{' || body.front() == '[') {
    const json j = ParseJson(body);
    if (j.is_array()) return WordList(j, "candidates");
    std::vector<std::string> words;
    bool found = false;
    for (const char* key : {"strong_global", "weak_global", "local", "luhn", "candidates"}) {
      if (!j.contains(key)) continue;
      found = true;
      for (auto& w : WordList(j[key], key)) words.push_back(std::move(w));
    }
    if (!found) {
      throw Error(ErrorKind::kSchema, "extraction JSON has no candidate lists");
    }
    return words;
  }

  std::vector<std::string_view> lines;
  for (auto line : SplitLines(body)) {
    line = Trim(line);
    if (!line.empty() && line.front() != '#') lines.push_back(line);
  }
  std::vector<std::string> words;
  if (lines.empty()) return words;
  if (lines.front().find(',') != std::string_view::npos) {
    const auto header = SplitCsv(lines.front());
    const auto col = std::find(header.begin(), header.end(), "word");
    if (col == header.end()) {
      throw Error(ErrorKind::kSchema, "extraction CSV needs a 'word' column");
    }
    const auto index = static_cast<std::size_t>(col - header.begin());
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const auto cells = SplitCsv(lines[i]);
      if (cells.size() <= index) {
        throw Error(ErrorKind::kSchema, "short CSV row: " + std::string(lines[i]));
      }
      std::string w = NormalizeWord(cells[index]);
      if (!w.empty()) words.push_back(std::move(w));
    }
    return words;
  }
  for (auto line : lines) {
    std::string w = NormalizeWord(line);
    if (!w.empty()) words.push_back(std::move(w));
  }
  return words;
}

Labeling ParseLabelCsv(std::string_view text) {
  Labeling labels;
  bool first = true;
  for (auto line : SplitLines(text)) {
    line = Trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto cells = SplitCsv(line);
    if (cells.size() != 2) {
      throw Error(ErrorKind::kSchema, "label rows need exactly two columns: " + std::string(line));
    }
    std::string label = cells[1];
    std::transform(label.begin(), label.end(), label.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    Label value;
    if (label == "k" || label == "keyword" || label == "1" || label == "yes") {
      value = Label::kKeyword;
    } else if (label == "nk" || label == "non-keyword" || label == "nonkeyword" ||
               label == "0" || label == "no") {
      value = Label::kNonKeyword;
    } else if (first && cells[0] == "word") {
      first = false;
      continue;
    } else {
      throw Error(ErrorKind::kSchema, "unknown label '" + cells[1] + "'");
    }
    first = false;
    std::string word = NormalizeWord(cells[0]);
    if (word.empty()) throw Error(ErrorKind::kSchema, "label row without a word");
    if (!labels.emplace(word, value).second) {
      throw Error(ErrorKind::kSchema, "word '" + word + "' labeled twice");
    }
  }
  return labels;
}

}  // namespace spatialkw::cli
