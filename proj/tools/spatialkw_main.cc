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

// spatialkw: keyword extraction from a single text via the response of word
// gap moments to random permutation, plus LUHN and chapter baselines and the
// evaluation metrics used to compare them.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cli/commands.h"

namespace {

using spatialkw::cli::RunConfig;

void AddInputOptions(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--input,-i", cfg.input, "UTF-8 text file (already lemmatized)")
      ->required();
  sub.add_option("--stopwords", cfg.stopwords,
                 "Stop-word list: 'en' (built in), 'none', or a file path")
      ->capture_default_str();
  sub.add_option("--chapter-pattern", cfg.chapter_pattern,
                 "Chapter delimiter line: literal prefix, or 're:<regex>'");
  sub.add_option("--min-token-length", cfg.min_token_length,
                 "Drop tokens with fewer letters")
      ->capture_default_str();
  sub.add_flag("!--no-lowercase", cfg.lowercase, "Keep original letter case");
}

void AddOutputOptions(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--format", cfg.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub.add_option("--output,-o", cfg.output, "Write to a file instead of stdout");
}

void AddSeedOptions(CLI::App& sub, RunConfig& cfg) {
  sub.add_option("--seed", cfg.seed, "Permutation seed")
      ->envname(spatialkw::cli::kSeedEnvVar)
      ->capture_default_str();
  sub.add_option("--realizations", cfg.realizations,
                 "Permutations averaged per moment")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void AddThresholdOptions(CLI::App& sub, RunConfig& cfg) {
  auto& t = cfg.thresholds;
  sub.add_option("--strong-global-max", t.strong_global_max, "A <= this: strong global")
      ->capture_default_str();
  sub.add_option("--weak-global-max", t.weak_global_max, "A <= this: weak global")
      ->capture_default_str();
  sub.add_option("--local-min", t.local_min, "A >= this: local")->capture_default_str();
  sub.add_option("--short-global-max", t.short_global_max, "A6 <= this: global (short)")
      ->capture_default_str();
  sub.add_option("--short-local-min", t.short_local_min, "A6 >= this: local (short)")
      ->capture_default_str();
  sub.add_option("--long-text-min-tokens", t.long_text_min_tokens,
                 "Token count from which a text counts as long")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spatialkw: single-text keyword extraction from word spacing statistics"};
  app.set_config("--config", "", "TOML/INI file of option values; flags take precedence");
  app.require_subcommand(1);

  RunConfig cfg;

  auto* extract = app.add_subcommand("extract", "Classify words as global/local keywords");
  AddInputOptions(*extract, cfg);
  AddSeedOptions(*extract, cfg);
  AddThresholdOptions(*extract, cfg);
  extract->add_option("--mode", cfg.mode, "auto, long (A) or short (A6)")
      ->check(CLI::IsMember({"auto", "long", "short"}))
      ->capture_default_str();
  AddOutputOptions(*extract, cfg);

  auto* baseline = app.add_subcommand("baseline", "LUHN frequency-band candidates");
  AddInputOptions(*baseline, cfg);
  baseline->add_option("--max-words", cfg.max_words, "Maximum candidates")
      ->capture_default_str();
  AddOutputOptions(*baseline, cfg);

  auto* chapters = app.add_subcommand("chapters", "Rank words by chapter occupancy score");
  AddInputOptions(*chapters, cfg);
  chapters->add_option("--top-n", cfg.top_n, "Rows to report")->capture_default_str();
  AddOutputOptions(*chapters, cfg);

  auto* stats = app.add_subcommand("stats", "Per-word frequency and gap statistics");
  AddInputOptions(*stats, cfg);
  AddSeedOptions(*stats, cfg);
  AddOutputOptions(*stats, cfg);

  auto* eval = app.add_subcommand("eval", "Precision, recall, F1 against annotations");
  eval->add_option("--extraction", cfg.extraction,
                   "Output of extract/baseline (JSON or CSV) or a word list");
  eval->add_option("--annotation", cfg.annotation,
                   "JSON {candidates, marked, full}")
      ->required();
  eval->add_option("--mode", cfg.mode,
                   "long (marked/full protocol), short (gold list), or auto")
      ->check(CLI::IsMember({"auto", "long", "short"}))
      ->capture_default_str();
  eval->add_option("--labels-a", cfg.labels_a, "Annotator A labels (word,label CSV)");
  eval->add_option("--labels-b", cfg.labels_b, "Annotator B labels (word,label CSV)");
  AddOutputOptions(*eval, cfg);

  auto* kappa = app.add_subcommand("kappa", "Cohen's kappa between two annotators");
  kappa->add_option("--labels-a", cfg.labels_a, "Annotator A labels (word,label CSV)")
      ->required();
  kappa->add_option("--labels-b", cfg.labels_b, "Annotator B labels (word,label CSV)")
      ->required();
  AddOutputOptions(*kappa, cfg);

  CLI11_PARSE(app, argc, argv);
  cfg.command = app.get_subcommands().front()->get_name();

  std::ostringstream buffer;
  try {
    spatialkw::cli::RunCommand(cfg, buffer);
  } catch (const spatialkw::cli::StageError& e) {
    std::cerr << "spatialkw " << cfg.command << ": " << e.what() << '\n';
    return spatialkw::cli::ExitCodeFor(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "spatialkw " << cfg.command << ": " << e.what() << '\n';
    return 1;
  }

  if (cfg.output.empty()) {
    std::cout << buffer.str();
    std::cout.flush();
    return std::cout ? EXIT_SUCCESS : 3;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  file << buffer.str();
  if (!file) {
    std::cerr << "spatialkw " << cfg.command << ": write: cannot write " << cfg.output << '\n';
    return 3;
  }
  return EXIT_SUCCESS;
}
