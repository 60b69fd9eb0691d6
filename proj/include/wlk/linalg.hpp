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
#include <vector>

#include "wlk/graph.hpp"
#include "wlk/interner.hpp"

namespace wlk {

/// Ascending table of the first primes, grown on demand by sieving.
class PrimeTable {
 public:
  explicit PrimeTable(std::size_t count = 0) { ensure(count); }

  /// Makes sure at least `count` primes are available. Never shrinks.
  void ensure(std::size_t count);

  std::size_t size() const { return primes_.size(); }
  std::uint64_t operator[](std::size_t i) const { return primes_[i]; }
  double log_prime(std::size_t i) const { return logs_[i]; }
  std::span<const std::uint64_t> primes() const { return primes_; }

 private:
  std::vector<std::uint64_t> primes_;
  std::vector<double> logs_;
};

PrimeTable prime_table(std::size_t n);

enum class LaMode {
  kAggregate,   // regroup by the aggregate value alone
  kPaired,  // regroup by (own label, aggregate value)
};

inline constexpr double kDefaultLaTolerance = 1e-9;

/// Sorts items by value (by own label first when `own` is given) and joins
/// consecutive items whose values differ by at most `tolerance`. Groups get
/// dense ids in ascending sort order.
std::vector<LabelId> discretize(std::span<const double> values, double tolerance = kDefaultLaTolerance,
                                std::optional<std::span<const LabelId>> own = std::nullopt);

struct LaStepResult {
  std::vector<double> values;
  std::vector<LabelId> labels;
};

/// values_i = log p(c_i) + sum_{j in row i} log p(c_j), where label id c maps
/// to the (c+1)-th prime; then discretize.
LaStepResult la_step(const Csr& adjacency, std::span<const LabelId> labels, PrimeTable& primes, LaMode mode,
                     double tolerance = kDefaultLaTolerance);

/// h applications of la_step starting from `initial`. Works on a vertex
/// adjacency (1-WL) or on a k-set graph adjacency (k-LWL / k-GWL).
std::vector<Coloring> la_refinement(const Csr& adjacency, const Coloring& initial, int h,
                                    LaMode mode = LaMode::kPaired, double tolerance = kDefaultLaTolerance);

/// Block-diagonal union of several operands, so one la_refinement run labels
/// a whole dataset in a shared label space. Returns the offsets of each block.
Csr block_diagonal(std::span<const Csr* const> blocks, std::vector<std::size_t>* item_offsets = nullptr);

}  // namespace wlk
