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

#include "wlk/kernel.hpp"

#include <cmath>
#include <string>

#include "wlk/error.hpp"
#include "wlk/parallel.hpp"

namespace wlk {

namespace {

double mass(const SparseBlock& block) {
  double sum = 0.0;
  for (const auto& [label, weight] : block) sum += weight;
  return sum;
}

}  // namespace

FeatureVector l1_normalize(const FeatureVector& v, NormScope scope) {
  FeatureVector out = v;
  if (scope == NormScope::kPerBlock) {
    for (auto& block : out.blocks) {
      const double m = mass(block);
      if (m <= 0.0) continue;
      for (auto& [label, weight] : block) weight /= m;
    }
    return out;
  }
  double total = 0.0;
  for (const auto& block : out.blocks) total += mass(block);
  if (total <= 0.0) return out;
  for (auto& block : out.blocks) {
    for (auto& [label, weight] : block) weight /= total;
  }
  return out;
}

double dot(const FeatureVector& u, const FeatureVector& v) {
  if (u.blocks.size() != v.blocks.size()) {
    throw ParameterError("dot: feature vectors span " + std::to_string(u.blocks.size()) + " and " +
                         std::to_string(v.blocks.size()) + " iterations");
  }
  double sum = 0.0;
  for (std::size_t b = 0; b < u.blocks.size(); ++b) {
    const auto& x = u.blocks[b];
    const auto& y = v.blocks[b];
    // Merge walk over the two sorted supports.
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() && j != y.end()) {
      if (i->first < j->first) {
        ++i;
      } else if (j->first < i->first) {
        ++j;
      } else {
        sum += i->second * j->second;
        ++i;
        ++j;
      }
    }
  }
  return sum;
}

GramMatrix gram_matrix(std::span<const FeatureVector> features, unsigned threads) {
  const auto n = static_cast<Eigen::Index>(features.size());
  GramMatrix k = GramMatrix::Zero(n, n);
  parallel_for(features.size(), threads, [&](std::size_t i) {
    for (std::size_t j = i; j < features.size(); ++j) {
      k(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = dot(features[i], features[j]);
    }
  });
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) k(i, j) = k(j, i);
  }
  return k;
}

GramMatrix cosine_normalize_gram(const GramMatrix& k) {
  const auto n = k.rows();
  GramMatrix out = GramMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double d = k(i, i) * k(j, j);
      if (k(i, i) <= 0.0 || k(j, j) <= 0.0) continue;
      out(i, j) = i == j ? 1.0 : k(i, j) / std::sqrt(d);
    }
  }
  return out;
}

bool psd_check(const GramMatrix& k, double jitter) {
  if (jitter < 0.0) throw ParameterError("psd_check: jitter must be non-negative");
  if (k.rows() != k.cols()) return false;
  if (k.rows() == 0) return true;
  GramMatrix shifted = k;
  shifted.diagonal().array() += jitter;
  Eigen::LLT<GramMatrix> llt(shifted);
  return llt.info() == Eigen::Success;
}

}  // namespace wlk
