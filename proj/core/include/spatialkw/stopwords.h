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

#ifndef SPATIALKW_STOPWORDS_H_
#define SPATIALKW_STOPWORDS_H_

#include <string_view>

#include "spatialkw/tokenizer.h"

namespace spatialkw {

// The shipped English list (data/stopwords_en.txt), compiled in.
std::string_view EnglishStopwordText();
StopwordSet EnglishStopwords();

}  // namespace spatialkw

#endif  // SPATIALKW_STOPWORDS_H_
