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

#ifndef SPATIALKW_TOOLS_CLI_COMMANDS_H_
#define SPATIALKW_TOOLS_CLI_COMMANDS_H_

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "spatialkw/error.h"
#include "spatialkw/spatial_extractor.h"

namespace spatialkw::cli {

inline constexpr std::uint64_t kDefaultSeed = 12345;
inline constexpr const char* kSeedEnvVar = "SPATIALKW_SEED";

// Effective settings for one invocation. Populated from flags (which override
// an optional config file) and echoed into every report.
struct RunConfig {
  std::string command;
  std::string input;
  std::string stopwords = "en";  // "en" (built-in), "none", or a file path
  std::string chapter_pattern;   // empty, a literal marker, or "re:<regex>"
  std::string mode = "auto";     // auto | long | short
  Thresholds thresholds;
  std::uint64_t seed = kDefaultSeed;
  std::size_t realizations = 1;
  std::string format = "json";   // json | csv
  std::size_t max_words = 282;
  std::size_t top_n = 36;
  std::size_t min_token_length = 1;
  bool lowercase = true;
  std::string output;            // empty = stdout
  // eval / kappa inputs
  std::string extraction;
  std::string annotation;
  std::string labels_a;
  std::string labels_b;
};

// A library error tagged with the pipeline stage that raised it.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const Error& cause)
      : std::runtime_error(stage + ": " + cause.what()),
        stage_(std::move(stage)),
        kind_(cause.kind()) {}

  const std::string& stage() const { return stage_; }
  ErrorKind kind() const { return kind_; }

 private:
  std::string stage_;
  ErrorKind kind_;
};

// Process exit code for a failed stage.
int ExitCodeFor(ErrorKind kind);

// Each command writes its serialized result to `out` and throws StageError
// on failure.
void RunExtract(const RunConfig& config, std::ostream& out);
void RunBaseline(const RunConfig& config, std::ostream& out);
void RunChapters(const RunConfig& config, std::ostream& out);
void RunStats(const RunConfig& config, std::ostream& out);
void RunEval(const RunConfig& config, std::ostream& out);
void RunKappa(const RunConfig& config, std::ostream& out);

// Dispatches on config.command.
void RunCommand(const RunConfig& config, std::ostream& out);

}  // namespace spatialkw::cli

#endif  // SPATIALKW_TOOLS_CLI_COMMANDS_H_
