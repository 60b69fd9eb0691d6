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

#include "wlk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "wlk/error.hpp"

namespace wlk {

void PrimeTable::ensure(std::size_t count) {
  if (primes_.size() >= count) return;
  // p_n < n (ln n + ln ln n) for n >= 6.
  const double n = static_cast<double>(std::max<std::size_t>(count, 6));
  const auto limit = static_cast<std::size_t>(n * (std::log(n) + std::log(std::log(n)))) + 16;
  std::vector<bool> composite(limit + 1, false);
  primes_.clear();
  for (std::size_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes_.push_back(i);
    for (std::size_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  logs_.resize(primes_.size());
  for (std::size_t i = 0; i < primes_.size(); ++i) logs_[i] = std::log(static_cast<double>(primes_[i]));
}

PrimeTable prime_table(std::size_t n) {
  if (n < 1) throw ParameterError("prime table size must be at least 1");
  return PrimeTable(n);
}

std::vector<LabelId> discretize(std::span<const double> values, double tolerance,
                                std::optional<std::span<const LabelId>> own) {
  if (!(tolerance > 0.0)) throw ParameterError("discretize tolerance must be positive");
  if (own && own->size() != values.size()) throw ParameterError("discretize: own-label vector size mismatch");

  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  auto own_of = [&](std::size_t i) -> LabelId { return own ? (*own)[i] : 0; };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (own_of(a) != own_of(b)) return own_of(a) < own_of(b);
    if (values[a] != values[b]) return values[a] < values[b];
    return a < b;
  });

  std::vector<LabelId> ids(values.size());
  LabelId next = 0;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const auto i = order[pos];
    if (pos > 0) {
      const auto prev = order[pos - 1];
      const bool same = own_of(prev) == own_of(i) && values[i] - values[prev] <= tolerance;
      if (!same) ++next;
    }
    ids[i] = next;
  }
  return ids;
}

LaStepResult la_step(const Csr& adjacency, std::span<const LabelId> labels, PrimeTable& primes, LaMode mode,
                     double tolerance) {
  if (adjacency.rows() != labels.size()) {
    throw ParameterError("la_step: adjacency has " + std::to_string(adjacency.rows()) + " rows but " +
                         std::to_string(labels.size()) + " labels were given");
  }
  const LabelId max_label = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
  primes.ensure(static_cast<std::size_t>(max_label) + 1);

  LaStepResult out;
  out.values.resize(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    double sum = primes.log_prime(labels[i]);
    for (auto j : adjacency.row(i)) sum += primes.log_prime(labels[j]);
    out.values[i] = sum;
  }
  out.labels = mode == LaMode::kPaired ? discretize(out.values, tolerance, labels) : discretize(out.values, tolerance);
  return out;
}

std::vector<Coloring> la_refinement(const Csr& adjacency, const Coloring& initial, int h, LaMode mode,
                                    double tolerance) {
  if (h < 0) throw ParameterError("iteration count must be non-negative");
  PrimeTable primes;
  std::vector<Coloring> out{initial};
  for (int it = 1; it <= h; ++it) {
    auto step = la_step(adjacency, out.back().labels, primes, mode, tolerance);
    out.push_back({out.back().iteration + 1, std::move(step.labels)});
  }
  return out;
}

Csr block_diagonal(std::span<const Csr* const> blocks, std::vector<std::size_t>* item_offsets) {
  Csr out;
  std::size_t base = 0;
  if (item_offsets) item_offsets->assign(1, 0);
  for (const Csr* block : blocks) {
    for (std::size_t i = 0; i < block->rows(); ++i) {
      for (auto j : block->row(i)) out.targets.push_back(static_cast<std::uint32_t>(base + j));
      out.offsets.push_back(out.targets.size());
    }
    base += block->rows();
    if (item_offsets) item_offsets->push_back(base);
  }
  return out;
}

}  // namespace wlk
