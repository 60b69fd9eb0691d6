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

#include <map>
#include <vector>

#include "wlk/interner.hpp"

namespace wlk {

/// Sparse per-iteration histogram: label id -> weight (count or mass).
using SparseBlock = std::map<LabelId, double>;

/// Concatenation of per-iteration blocks 0..h. Label ids of all feature
/// vectors that are compared must come from one interner run.
struct FeatureVector {
  std::vector<SparseBlock> blocks;

  int h() const { return static_cast<int>(blocks.size()) - 1; }
  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

}  // namespace wlk
