// Copyright 2026 The wlkernels Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "wlk/graph.hpp"

namespace wlk {

using LabelId = std::uint32_t;

/// Structured refinement key. The first word is a variant tag; the rest is
/// the variant payload. Keys compare lexicographically on their words.
class LabelKey {
 public:
  enum class Kind : std::uint64_t { kRawLabel = 0, kDegree = 1, kIsoType = 2, kRefine = 3 };

  /// Initial vertex key from a raw node label.
  static LabelKey raw_label(RawLabel label);
  /// Initial vertex key for unlabeled graphs.
  static LabelKey degree(std::size_t degree);
  /// Canonical k-set code (see kset.hpp).
  static LabelKey iso_type(std::span<const std::int64_t> canonical_code);
  /// (previous label, ascending neighbor labels). The neighbor tuple must be sorted.
  static LabelKey refine(LabelId previous, std::span<const LabelId> sorted_neighbors);

  Kind kind() const { return static_cast<Kind>(words_.front()); }
  std::span<const std::uint64_t> words() const { return words_; }

  /// Only meaningful for kRefine keys.
  LabelId previous() const { return static_cast<LabelId>(words_[1]); }
  std::span<const std::uint64_t> neighbor_words() const { return std::span(words_).subspan(2); }

  friend bool operator==(const LabelKey&, const LabelKey&) = default;
  friend auto operator<=>(const LabelKey&, const LabelKey&) = default;

  struct Hash {
    std::size_t operator()(const LabelKey& key) const;
  };

 private:
  explicit LabelKey(std::vector<std::uint64_t> words) : words_(std::move(words)) {}
  std::vector<std::uint64_t> words_;
};

/// Injective map from structured keys to dense label ids, shared by every
/// graph of a run. Ids are issued in interning order.
///
/// Mutation is single-threaded. Concurrent find() calls are safe while no
/// thread interns.
class LabelInterner {
 public:
  LabelId intern(const LabelKey& key);
  std::optional<LabelId> find(const LabelKey& key) const;

  /// Phase two of the deterministic protocol: sorts the batch, drops
  /// duplicates and interns fresh keys in ascending key order.
  void intern_batch(std::vector<LabelKey> keys);

  const LabelKey& key(LabelId id) const { return keys_.at(id); }
  std::size_t size() const { return keys_.size(); }

 private:
  std::vector<LabelKey> keys_;
  std::unordered_map<LabelKey, LabelId, LabelKey::Hash> ids_;
};

/// Labels of the colored items (vertices or k-sets) after `iteration` rounds.
struct Coloring {
  int iteration = 0;
  std::vector<LabelId> labels;
};

}  // namespace wlk
