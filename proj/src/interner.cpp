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

#include "wlk/interner.hpp"

#include <algorithm>
#include <cassert>

namespace wlk {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

LabelKey LabelKey::raw_label(RawLabel label) {
  return LabelKey({static_cast<std::uint64_t>(Kind::kRawLabel), static_cast<std::uint64_t>(label)});
}

LabelKey LabelKey::degree(std::size_t degree) {
  return LabelKey({static_cast<std::uint64_t>(Kind::kDegree), static_cast<std::uint64_t>(degree)});
}

LabelKey LabelKey::iso_type(std::span<const std::int64_t> canonical_code) {
  std::vector<std::uint64_t> words;
  words.reserve(canonical_code.size() + 1);
  words.push_back(static_cast<std::uint64_t>(Kind::kIsoType));
  for (auto c : canonical_code) words.push_back(static_cast<std::uint64_t>(c));
  return LabelKey(std::move(words));
}

LabelKey LabelKey::refine(LabelId previous, std::span<const LabelId> sorted_neighbors) {
  assert(std::is_sorted(sorted_neighbors.begin(), sorted_neighbors.end()) && "RefineKey neighbors must be sorted");
  std::vector<std::uint64_t> words;
  words.reserve(sorted_neighbors.size() + 2);
  words.push_back(static_cast<std::uint64_t>(Kind::kRefine));
  words.push_back(previous);
  words.insert(words.end(), sorted_neighbors.begin(), sorted_neighbors.end());
  return LabelKey(std::move(words));
}

std::size_t LabelKey::Hash::operator()(const LabelKey& key) const {
  std::uint64_t h = key.words_.size();
  for (auto w : key.words_) h = mix(h ^ w);
  return static_cast<std::size_t>(h);
}

LabelId LabelInterner::intern(const LabelKey& key) {
  auto [it, fresh] = ids_.try_emplace(key, static_cast<LabelId>(keys_.size()));
  if (fresh) keys_.push_back(key);
  return it->second;
}

std::optional<LabelId> LabelInterner::find(const LabelKey& key) const {
  auto it = ids_.find(key);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

void LabelInterner::intern_batch(std::vector<LabelKey> keys) {
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (const auto& key : keys) intern(key);
}

}  // namespace wlk
