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

#ifndef SPATIALKW_ERROR_H_
#define SPATIALKW_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace spatialkw {

enum class ErrorKind {
  kDecode,               // input is not valid UTF-8
  kValidation,           // malformed arguments (e.g. unsorted chapter breaks)
  kConfig,               // bad configuration (thresholds, patterns, flags)
  kUndefinedStatistic,   // gap statistic requested for a word with fewer than 2 occurrences
  kNotFound,             // word absent from the document
  kDomain,               // argument outside the mathematical domain
  kUnsupportedDocument,  // operation needs chapters the document does not have
  kUndefinedMetric,      // evaluation metric with an empty denominator
  kIo,                   // file could not be read or written
  kSchema,               // input file does not match the expected schema
};

std::string_view ErrorKindName(ErrorKind kind);

// All library failures are reported through this exception type. The kind
// lets callers (the CLI in particular) map failures onto stages and exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace spatialkw

#endif  // SPATIALKW_ERROR_H_
