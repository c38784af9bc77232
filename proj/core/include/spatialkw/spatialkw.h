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

#ifndef SPATIALKW_SPATIALKW_H_
#define SPATIALKW_SPATIALKW_H_

#include "spatialkw/chapter_extractor.h"
#include "spatialkw/chapters.h"
#include "spatialkw/document.h"
#include "spatialkw/error.h"
#include "spatialkw/evaluation.h"
#include "spatialkw/gap_stats.h"
#include "spatialkw/luhn.h"
#include "spatialkw/permutation.h"
#include "spatialkw/spatial_extractor.h"
#include "spatialkw/stopwords.h"
#include "spatialkw/tokenizer.h"

#endif  // SPATIALKW_SPATIALKW_H_
