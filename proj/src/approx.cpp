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

#include "wlk/approx.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <unordered_map>

#include "wlk/error.hpp"
#include "wlk/parallel.hpp"
#include "wlk/refine.hpp"

namespace wlk {

namespace {

void check_common(const SampleSizeParams& p) {
  if (!(p.epsilon > 0.0 && p.epsilon <= 1.0)) throw ParameterError("epsilon must lie in (0, 1]");
  if (!(p.delta > 0.0 && p.delta < 1.0)) throw ParameterError("delta must lie in (0, 1)");
  if (p.gamma < 1) throw ParameterError("gamma must be at least 1");
}

std::uint64_t ceil_count(double value) {
  // A value within round-off of an integer is not bumped to the next one.
  const double rounded = std::round(value);
  if (std::abs(value - rounded) < 1e-9 * std::max(1.0, value)) return static_cast<std::uint64_t>(rounded);
  return static_cast<std::uint64_t>(std::ceil(value));
}

struct KSetHash {
  std::size_t operator()(const KSet& s) const {
    std::size_t h = s.size();
    for (auto v : s) h = h * 0x100000001b3ULL ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    return h;
  }
};

using LabelCache = std::unordered_map<KSet, std::vector<LabelId>, KSetHash>;

/// Labels every sample (in sample order). Distinct uncached sets are traced
/// in parallel, then resolved into the shared interner sequentially in order
/// of first appearance.
std::vector<const std::vector<LabelId>*> label_samples(const Graph& g, int h, const std::vector<KSet>& samples,
                                                       LabelInterner& interner, const SamplerOptions& options,
                                                       LabelCache& cache) {
  if (!options.memoize) cache.clear();
  std::vector<const KSet*> fresh;
  {
    std::set<const KSet*, bool (*)(const KSet*, const KSet*)> queued(
        [](const KSet* a, const KSet* b) { return *a < *b; });
    for (const auto& s : samples) {
      if (!cache.contains(s) && queued.insert(&s).second) fresh.push_back(&s);
    }
  }

  std::vector<LocalTrace> traces(fresh.size());
  parallel_for(fresh.size(), options.threads, [&](std::size_t i) { traces[i] = trace_local_labels(g, *fresh[i], h); });
  for (std::size_t i = 0; i < fresh.size(); ++i) cache.emplace(*fresh[i], resolve_local_labels(traces[i], interner));

  std::vector<const std::vector<LabelId>*> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(&cache.at(s));
  return out;
}

std::vector<KSet> draw(const Graph& g, int k, std::uint64_t count, std::mt19937_64& rng) {
  std::vector<KSet> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(sample_kset_uniform(g, k, rng));
  return out;
}

FeatureVector normalized(const RademacherState& state, int h) {
  FeatureVector fv;
  fv.blocks.resize(static_cast<std::size_t>(h) + 1);
  if (state.m == 0) return fv;
  for (std::size_t j = 0; j < state.counts.size(); ++j) {
    for (auto [label, count] : state.counts[j]) {
      fv.blocks[j][label] = static_cast<double>(count) / static_cast<double>(state.m);
    }
  }
  return fv;
}

void check_sampling_args(int k, int h) {
  if (k < 2) throw ParameterError("k-set order must be at least 2, got " + std::to_string(k));
  if (h < 0) throw ParameterError("iteration count must be non-negative");
}

}  // namespace

std::uint64_t sample_size_single(const SampleSizeParams& p) {
  check_common(p);
  const double gamma = static_cast<double>(p.gamma);
  const double ratio = p.epsilon / gamma;
  return ceil_count(std::log(2.0 * gamma / p.delta) / (2.0 * ratio * ratio));
}

std::uint64_t sample_size_dataset(const SampleSizeParams& p) {
  check_common(p);
  if (!p.dataset_size) throw ParameterError("dataset size is required for the dataset-level sample size");
  if (*p.dataset_size < 1) throw ParameterError("dataset size must be at least 1");
  const double gamma = static_cast<double>(p.gamma);
  const double ratio = p.epsilon / gamma;
  return ceil_count(std::log(2.0 * gamma / p.delta * static_cast<double>(*p.dataset_size)) / (2.0 * ratio * ratio));
}

std::size_t observed_label_count(std::span<const FeatureVector> features, int iteration) {
  std::set<LabelId> labels;
  for (const auto& fv : features) {
    if (iteration < 0 || iteration > fv.h()) throw ParameterError("iteration outside feature vector span");
    for (const auto& [label, weight] : fv.blocks[static_cast<std::size_t>(iteration)]) {
      if (weight > 0) labels.insert(label);
    }
  }
  return labels.size();
}

KSet sample_kset_uniform(const Graph& g, int k, std::mt19937_64& rng) {
  if (k < 2) throw ParameterError("k-set order must be at least 2, got " + std::to_string(k));
  if (g.num_vertices() < static_cast<std::size_t>(k)) {
    throw ParameterError("cannot sample a " + std::to_string(k) + "-set from a graph with " +
                         std::to_string(g.num_vertices()) + " vertices");
  }
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g.num_vertices() - 1));
  KSet s;
  s.reserve(static_cast<std::size_t>(k));
  while (s.size() < static_cast<std::size_t>(k)) {
    const Vertex v = pick(rng);
    if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
  }
  std::sort(s.begin(), s.end());
  return s;
}

LocalTrace trace_local_labels(const Graph& g, std::span<const Vertex> s, int h) {
  if (h < 0) throw ParameterError("iteration count must be non-negative");
  const int k = static_cast<int>(s.size());
  std::vector<Vertex> vertices;
  for (const auto& t : c_neighborhood(g, s, h)) vertices.insert(vertices.end(), t.begin(), t.end());
  auto sub = induced_subgraph(g, vertices);

  KSet image;
  image.reserve(s.size());
  for (auto v : s) image.push_back(*sub.new_id(v));

  LocalTrace trace;
  auto colorings = kset_colorings(sub.graph, k, h, Neighborhood::kLocal, trace.labels);
  const auto r = KSetIndex(sub.graph.num_vertices(), k).rank(image);
  for (const auto& c : colorings) trace.chain.push_back(c.labels[r]);
  return trace;
}

std::vector<LabelId> resolve_local_labels(const LocalTrace& trace, LabelInterner& interner) {
  std::unordered_map<LabelId, LabelId> memo;
  auto resolve = [&](auto&& self, LabelId local) -> LabelId {
    if (auto it = memo.find(local); it != memo.end()) return it->second;
    const LabelKey& key = trace.labels.key(local);
    LabelId global = 0;
    if (key.kind() == LabelKey::Kind::kRefine) {
      const LabelId previous = self(self, key.previous());
      std::vector<LabelId> neighbors;
      neighbors.reserve(key.neighbor_words().size());
      for (auto w : key.neighbor_words()) neighbors.push_back(self(self, static_cast<LabelId>(w)));
      std::sort(neighbors.begin(), neighbors.end());
      global = interner.intern(LabelKey::refine(previous, neighbors));
    } else {
      global = interner.intern(key);
    }
    memo.emplace(local, global);
    return global;
  };

  std::vector<LabelId> out;
  out.reserve(trace.chain.size());
  for (auto local : trace.chain) out.push_back(resolve(resolve, local));
  return out;
}

std::vector<LabelId> local_labels(const Graph& g, std::span<const Vertex> s, int h, LabelInterner& interner) {
  return resolve_local_labels(trace_local_labels(g, s, h), interner);
}

void RademacherState::add(std::span<const LabelId> labels_per_iteration) {
  if (counts.size() < labels_per_iteration.size()) counts.resize(labels_per_iteration.size());
  for (std::size_t j = 0; j < labels_per_iteration.size(); ++j) ++counts[j][labels_per_iteration[j]];
  ++m;
}

double massart_rademacher_bound(const RademacherState& state) {
  if (state.m == 0) throw ParameterError("Rademacher bound needs at least one sample");
  std::uint64_t max_count = 0;
  std::size_t distinct = 0;
  for (const auto& block : state.counts) {
    distinct += block.size();
    for (const auto& [label, count] : block) max_count = std::max(max_count, count);
  }
  const double vectors = static_cast<double>(distinct + 1);
  return std::sqrt(static_cast<double>(max_count)) * std::sqrt(2.0 * std::log(vectors)) /
         static_cast<double>(state.m);
}

double massart_deviation_bound(const RademacherState& state, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw ParameterError("delta must lie in (0, 1)");
  const double r = massart_rademacher_bound(state);
  return 2.0 * r + 3.0 * std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(state.m)));
}

SampledEstimate sample_fixed(const Graph& g, int k, int h, std::uint64_t sample_count, std::uint64_t seed,
                           LabelInterner& interner, const SamplerOptions& options) {
  check_sampling_args(k, h);
  if (sample_count < 1) throw ParameterError("sample count must be at least 1");
  SampledEstimate out;
  out.seed = seed;
  if (g.num_vertices() < static_cast<std::size_t>(k)) {
    out.estimate.blocks.resize(static_cast<std::size_t>(h) + 1);
    out.too_small = true;
    return out;
  }

  std::mt19937_64 rng(seed);
  LabelCache cache;
  const auto samples = draw(g, k, sample_count, rng);
  RademacherState state;
  state.counts.resize(static_cast<std::size_t>(h) + 1);
  for (const auto* labels : label_samples(g, h, samples, interner, options, cache)) state.add(*labels);

  out.estimate = normalized(state, h);
  out.sample_count = state.m;
  return out;
}

SampledEstimate sample_adaptive(const Graph& g, int k, int h, const AdaptiveParams& params, std::uint64_t seed,
                           LabelInterner& interner, const SamplerOptions& options) {
  check_sampling_args(k, h);
  if (!(params.epsilon > 0.0 && params.epsilon <= 1.0)) throw ParameterError("epsilon must lie in (0, 1]");
  if (!(params.delta > 0.0 && params.delta < 1.0)) throw ParameterError("delta must lie in (0, 1)");
  if (params.initial_size < 1) throw ParameterError("initial sample size must be at least 1");
  if (!(params.growth_factor >= 1.0)) throw ParameterError("growth factor must be at least 1");

  SampledEstimate out;
  out.seed = seed;
  if (g.num_vertices() < static_cast<std::size_t>(k)) {
    out.estimate.blocks.resize(static_cast<std::size_t>(h) + 1);
    out.too_small = true;
    return out;
  }

  std::mt19937_64 rng(seed);
  LabelCache cache;
  RademacherState state;
  state.counts.resize(static_cast<std::size_t>(h) + 1);
  for (int round = 0;; ++round) {
    const auto batch = static_cast<std::uint64_t>(
        std::llround(static_cast<double>(params.initial_size) * std::pow(params.growth_factor, round)));
    if (state.m + batch > params.max_samples) {
      throw ResourceError("adaptive sampling did not reach epsilon = " + std::to_string(params.epsilon) + " within " +
                          std::to_string(params.max_samples) + " samples (last bound " +
                          (out.rounds.empty() ? std::string("n/a") : std::to_string(out.rounds.back().bound)) + ")");
    }
    const auto samples = draw(g, k, batch, rng);
    for (const auto* labels : label_samples(g, h, samples, interner, options, cache)) state.add(*labels);

    const double delta = params.strict_delta ? params.delta * std::pow(0.5, round + 1) : params.delta;
    const double bound = massart_deviation_bound(state, delta);
    out.rounds.push_back({round, batch, state.m, delta, bound});
    if (bound <= params.epsilon) break;
  }

  out.estimate = normalized(state, h);
  out.sample_count = state.m;
  return out;
}

}  // namespace wlk
