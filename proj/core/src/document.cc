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

#include "spatialkw/document.h"

#include <limits>

#include "spatialkw/error.h"

namespace spatialkw {

WordId Vocabulary::Intern(std::string_view word) {
  if (auto it = index_.find(word); it != index_.end()) return it->second;
  const auto id = static_cast<WordId>(words_.size());
  words_.emplace_back(word);
  index_.emplace(words_.back(), id);
  return id;
}

std::optional<WordId> Vocabulary::Find(std::string_view word) const {
  if (auto it = index_.find(word); it != index_.end()) return it->second;
  return std::nullopt;
}

Document::Document(std::shared_ptr<const Vocabulary> vocab, std::vector<WordId> ids,
                   std::vector<std::size_t> breaks)
    : vocab_(std::move(vocab)), ids_(std::move(ids)), breaks_(std::move(breaks)) {
  positions_.resize(vocab_->size());
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    positions_[ids_[i]].push_back(static_cast<Position>(i));
  }
  if (!breaks_.empty()) {
    chapter_count_ = breaks_.size() + 1;
    chapter_of_.resize(ids_.size());
    ChapterId chapter = 1;
    std::size_t next = 0;
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      while (next < breaks_.size() && breaks_[next] <= i) {
        ++chapter;
        ++next;
      }
      chapter_of_[i] = chapter;
    }
  }
}

Document Document::Build(std::span<const std::string> tokens,
                         std::span<const std::size_t> chapter_breaks) {
  if (tokens.size() > std::numeric_limits<Position>::max()) {
    throw Error(ErrorKind::kValidation, "document exceeds 2^32-1 tokens");
  }
  for (std::size_t k = 0; k < chapter_breaks.size(); ++k) {
    if (chapter_breaks[k] >= tokens.size()) {
      throw Error(ErrorKind::kValidation,
                  "chapter break " + std::to_string(chapter_breaks[k]) +
                      " is out of range for " + std::to_string(tokens.size()) +
                      " tokens");
    }
    if (k > 0 && chapter_breaks[k] <= chapter_breaks[k - 1]) {
      throw Error(ErrorKind::kValidation, "chapter breaks must be strictly increasing");
    }
  }
  auto vocab = std::make_shared<Vocabulary>();
  std::vector<WordId> ids;
  ids.reserve(tokens.size());
  for (const auto& t : tokens) ids.push_back(vocab->Intern(t));
  return Document(std::move(vocab), std::move(ids),
                  std::vector<std::size_t>(chapter_breaks.begin(), chapter_breaks.end()));
}

Document Document::WithTokenOrder(std::vector<WordId> ids) const {
  if (ids.size() != ids_.size()) {
    throw Error(ErrorKind::kValidation, "token order must keep the document length");
  }
  Document out(vocab_, std::move(ids), {});
  for (std::size_t w = 0; w < positions_.size(); ++w) {
    if (out.positions_[w].size() != positions_[w].size()) {
      throw Error(ErrorKind::kValidation, "token order is not a rearrangement");
    }
  }
  return out;
}

std::vector<std::string> Document::Tokens() const {
  std::vector<std::string> out;
  out.reserve(ids_.size());
  for (WordId id : ids_) out.emplace_back(vocab_->Word(id));
  return out;
}

WordId Document::IdOf(std::string_view word) const {
  if (auto id = vocab_->Find(word)) return *id;
  throw Error(ErrorKind::kNotFound, "word not in document: " + std::string(word));
}

}  // namespace spatialkw
