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
#include <map>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "wlk/feature_vector.hpp"
#include "wlk/graph.hpp"
#include "wlk/interner.hpp"
#include "wlk/kset.hpp"

namespace wlk {

// ---------------------------------------------------------------------------
// Sample sizes from the Hoeffding + union bound argument.
// ---------------------------------------------------------------------------

struct SampleSizeParams {
  double epsilon = 0.1;  // additive error (lambda for the dataset-level count)
  double delta = 0.1;    // failure probability
  std::uint64_t gamma = 1;  // upper bound on the number of distinct labels
  std::optional<std::uint64_t> dataset_size;
};

/// ceil( ln(2 gamma / delta) / (2 (epsilon / gamma)^2) ).
std::uint64_t sample_size_single(const SampleSizeParams& p);

/// ceil( ln(2 gamma / delta * |dataset|) / (2 (lambda / gamma)^2) ), lambda
/// taken from p.epsilon. Used for both the k-LWL and the 1-WL dataset bound.
std::uint64_t sample_size_dataset(const SampleSizeParams& p);

/// Number of distinct labels at `iteration` over a set of exact feature
/// vectors; an empirical lower reference for gamma, not an upper bound.
std::size_t observed_label_count(std::span<const FeatureVector> features, int iteration);

// ---------------------------------------------------------------------------
// Sampling and per-sample labeling.
// ---------------------------------------------------------------------------

/// Uniform k-set: k distinct vertex draws (redraw on collision), sorted.
/// Throws ParameterError when the graph has fewer than k vertices.
KSet sample_kset_uniform(const Graph& g, int k, std::mt19937_64& rng);

/// Result of running the local k-LWL around one k-set with a private
/// interner. Computing a trace touches no shared state.
struct LocalTrace {
  LabelInterner labels;        // private ids
  std::vector<LabelId> chain;  // private label of the sampled set at 0..h
};

/// Builds the h-neighborhood of s, the subgraph induced by its vertex union,
/// and runs h steps of exact k-LWL there.
LocalTrace trace_local_labels(const Graph& g, std::span<const Vertex> s, int h);

/// Maps a trace's private ids onto `interner`. Only keys the sampled set's
/// labels depend on are interned; by locality these coincide with the keys
/// a full-graph k-LWL run would produce.
std::vector<LabelId> resolve_local_labels(const LocalTrace& trace, LabelInterner& interner);

/// Labels of s at iterations 0..h computed from its h-neighborhood only.
std::vector<LabelId> local_labels(const Graph& g, std::span<const Vertex> s, int h, LabelInterner& interner);

// ---------------------------------------------------------------------------
// Estimators.
// ---------------------------------------------------------------------------

struct AdaptiveRound {
  int round = 0;
  std::uint64_t batch = 0;
  std::uint64_t total = 0;
  double delta = 0.0;
  double bound = 0.0;
};

struct SampledEstimate {
  FeatureVector estimate;  // per-block masses, each block sums to 1
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  std::vector<AdaptiveRound> rounds;
  bool too_small = false;  // graph has fewer than k vertices; estimate is zero
};

struct SamplerOptions {
  unsigned threads = 1;
  /// Reuse labels of k-sets drawn earlier in the same run.
  bool memoize = true;
};

/// Fixed-size uniform sampling over all iterations 0..h.
SampledEstimate sample_fixed(const Graph& g, int k, int h, std::uint64_t sample_count, std::uint64_t seed,
                           LabelInterner& interner, const SamplerOptions& options = {});

/// Per-iteration label counts over a sample.
struct RademacherState {
  std::uint64_t m = 0;
  std::vector<std::map<LabelId, std::uint64_t>> counts;

  void add(std::span<const LabelId> labels_per_iteration);
};

/// Massart bound on the conditional Rademacher average over the indicator
/// family of all (iteration, label) pairs:
/// sqrt(max count) * sqrt(2 ln(distinct pairs + 1)) / m.
double massart_rademacher_bound(const RademacherState& state);

/// 2 R + 3 sqrt(ln(2 / delta) / (2 m)). Throws ParameterError when m = 0.
double massart_deviation_bound(const RademacherState& state, double delta);

struct AdaptiveParams {
  double epsilon = 0.1;
  double delta = 0.1;
  std::uint64_t initial_size = 100;
  double growth_factor = 2.0;
  std::uint64_t max_samples = 10'000'000;
  /// Spend delta * 2^-(i+1) in round i instead of the full delta every round.
  bool strict_delta = false;
};

/// Adaptive sampling: grows the sample geometrically until the deviation
/// bound drops to epsilon. Throws ResourceError when max_samples would be
/// exceeded.
SampledEstimate sample_adaptive(const Graph& g, int k, int h, const AdaptiveParams& params, std::uint64_t seed,
                           LabelInterner& interner, const SamplerOptions& options = {});

}  // namespace wlk
