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

#ifndef SPATIALKW_DOCUMENT_H_
#define SPATIALKW_DOCUMENT_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace spatialkw {

using WordId = std::uint32_t;
using Position = std::uint32_t;
using ChapterId = std::uint32_t;

// Distinct word strings, indexed by WordId in order of first appearance.
// Shared between a document and its permutations so ids stay comparable.
class Vocabulary {
 public:
  WordId Intern(std::string_view word);
  std::optional<WordId> Find(std::string_view word) const;
  std::string_view Word(WordId id) const { return words_[id]; }
  std::size_t size() const { return words_.size(); }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::vector<std::string> words_;
  std::unordered_map<std::string, WordId, Hash, std::equal_to<>> index_;
};

// Immutable tokenized text with a per-word occurrence index and optional
// chapter assignment. Safe for concurrent reads.
class Document {
 public:
  // Chapter k (1-based) holds the tokens in [breaks[k-2], breaks[k-1]); tokens
  // before the first break are chapter 1. An empty break list means the text
  // has no chapter structure (chapter_count() == 0). Throws Error(kValidation)
  // if breaks are not strictly increasing or not all < tokens.size().
  static Document Build(std::span<const std::string> tokens,
                        std::span<const std::size_t> chapter_breaks = {});

  // Reuses this document's vocabulary with a new token order. `ids` must be a
  // rearrangement of token_ids(); chapter structure is dropped.
  Document WithTokenOrder(std::vector<WordId> ids) const;

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  std::size_t vocabulary_size() const { return vocab_->size(); }
  std::size_t chapter_count() const { return chapter_count_; }
  bool has_chapters() const { return chapter_count_ > 0; }

  std::span<const WordId> token_ids() const { return ids_; }
  std::string_view token(std::size_t index) const { return vocab_->Word(ids_[index]); }
  std::vector<std::string> Tokens() const;

  std::string_view word(WordId id) const { return vocab_->Word(id); }
  std::optional<WordId> Find(std::string_view word) const { return vocab_->Find(word); }
  // Throws Error(kNotFound) for words that never occur.
  WordId IdOf(std::string_view word) const;

  // Sorted 0-based occurrence positions of a word; never empty.
  std::span<const Position> positions(WordId id) const { return positions_[id]; }
  std::span<const Position> positions(std::string_view word) const {
    return positions(IdOf(word));
  }
  std::size_t count(WordId id) const { return positions_[id].size(); }

  // 1-based chapter id of a token; only valid when has_chapters().
  ChapterId chapter_of(std::size_t index) const { return chapter_of_[index]; }
  std::span<const ChapterId> chapter_ids() const { return chapter_of_; }
  std::span<const std::size_t> chapter_breaks() const { return breaks_; }

  const std::shared_ptr<const Vocabulary>& vocabulary() const { return vocab_; }

 private:
  Document(std::shared_ptr<const Vocabulary> vocab, std::vector<WordId> ids,
           std::vector<std::size_t> breaks);

  std::shared_ptr<const Vocabulary> vocab_;
  std::vector<WordId> ids_;
  std::vector<std::vector<Position>> positions_;
  std::vector<std::size_t> breaks_;
  std::vector<ChapterId> chapter_of_;
  std::size_t chapter_count_ = 0;
};

}  // namespace spatialkw

#endif  // SPATIALKW_DOCUMENT_H_
