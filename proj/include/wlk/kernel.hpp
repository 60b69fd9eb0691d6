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

#include <span>

#include <Eigen/Dense>

#include "wlk/feature_vector.hpp"

namespace wlk {

/// Dense symmetric n x n matrix of pairwise kernel values, rows in dataset order.
using GramMatrix = Eigen::MatrixXd;

enum class NormScope {
  kPerBlock,     // each iteration block divided by its own L1 mass
  kWholeVector,  // the concatenation divided by its total mass
};

/// Zero-mass blocks (or vectors) are returned unchanged.
FeatureVector l1_normalize(const FeatureVector& v, NormScope scope);

/// Sum over matching (block, label) pairs. Throws ParameterError if the
/// vectors span a different number of iterations.
double dot(const FeatureVector& u, const FeatureVector& v);

/// All pairwise dot products; each unordered pair is computed once.
GramMatrix gram_matrix(std::span<const FeatureVector> features, unsigned threads = 1);

/// K'_ij = K_ij / sqrt(K_ii K_jj); rows and columns with a zero diagonal
/// entry become zero.
GramMatrix cosine_normalize_gram(const GramMatrix& k);

/// True iff K + jitter * I has a Cholesky factorization.
bool psd_check(const GramMatrix& k, double jitter = 0.0);

}  // namespace wlk
