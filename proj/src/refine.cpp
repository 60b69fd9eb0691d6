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

#include "wlk/refine.hpp"

#include <algorithm>
#include <unordered_map>

#include "wlk/error.hpp"
#include "wlk/parallel.hpp"

namespace wlk {

std::vector<std::vector<LabelId>> intern_two_phase(const std::vector<std::vector<LabelKey>>& keys,
                                                   LabelInterner& interner, unsigned threads) {
  std::vector<const LabelKey*> order;
  for (const auto& per_graph : keys) {
    for (const auto& key : per_graph) order.push_back(&key);
  }
  std::sort(order.begin(), order.end(), [](const LabelKey* a, const LabelKey* b) { return *a < *b; });
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || !(*order[i] == *order[i - 1])) interner.intern(*order[i]);
  }

  std::vector<std::vector<LabelId>> ids(keys.size());
  const LabelInterner& frozen = interner;
  parallel_for(keys.size(), threads, [&](std::size_t g) {
    ids[g].reserve(keys[g].size());
    for (const auto& key : keys[g]) ids[g].push_back(*frozen.find(key));
  });
  return ids;
}

std::vector<LabelKey> refinement_keys(const Csr& operand, std::span<const LabelId> labels) {
  if (operand.rows() != labels.size()) {
    throw ParameterError("coloring covers " + std::to_string(labels.size()) + " items, operand has " +
                         std::to_string(operand.rows()));
  }
  std::vector<LabelKey> keys;
  keys.reserve(labels.size());
  std::vector<LabelId> scratch;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    scratch.clear();
    for (auto j : operand.row(i)) scratch.push_back(labels[j]);
    std::sort(scratch.begin(), scratch.end());
    keys.push_back(LabelKey::refine(labels[i], scratch));
  }
  return keys;
}

std::vector<std::vector<Coloring>> refine_batch(std::span<const Csr* const> operands, std::vector<Coloring> initial,
                                                int h, LabelInterner& interner, unsigned threads) {
  if (h < 0) throw ParameterError("iteration count must be non-negative");
  if (operands.size() != initial.size()) throw ParameterError("refine_batch: operand/coloring count mismatch");

  std::vector<std::vector<Coloring>> result(operands.size());
  for (std::size_t g = 0; g < operands.size(); ++g) {
    result[g].reserve(static_cast<std::size_t>(h) + 1);
    result[g].push_back(std::move(initial[g]));
  }
  for (int it = 1; it <= h; ++it) {
    std::vector<std::vector<LabelKey>> keys(operands.size());
    parallel_for(operands.size(), threads,
                 [&](std::size_t g) { keys[g] = refinement_keys(*operands[g], result[g].back().labels); });
    auto ids = intern_two_phase(keys, interner, threads);
    for (std::size_t g = 0; g < operands.size(); ++g) result[g].push_back({it, std::move(ids[g])});
  }
  return result;
}

SparseBlock histogram(const Coloring& coloring) {
  SparseBlock block;
  for (auto label : coloring.labels) block[label] += 1.0;
  return block;
}

std::vector<std::uint32_t> canonical_partition(std::span<const LabelId> labels) {
  std::unordered_map<LabelId, std::uint32_t> first;
  std::vector<std::uint32_t> out;
  out.reserve(labels.size());
  for (auto label : labels) {
    auto [it, fresh] = first.try_emplace(label, static_cast<std::uint32_t>(first.size()));
    out.push_back(it->second);
  }
  return out;
}

bool refines(std::span<const LabelId> finer, std::span<const LabelId> coarser) {
  if (finer.size() != coarser.size()) return false;
  std::unordered_map<LabelId, LabelId> parent;
  for (std::size_t i = 0; i < finer.size(); ++i) {
    auto [it, fresh] = parent.try_emplace(finer[i], coarser[i]);
    if (!fresh && it->second != coarser[i]) return false;
  }
  return true;
}

std::vector<LabelKey> initial_vertex_keys(const Graph& g) {
  std::vector<LabelKey> keys;
  keys.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    keys.push_back(g.has_node_labels() ? LabelKey::raw_label(g.node_label(v)) : LabelKey::degree(g.degree(v)));
  }
  return keys;
}

Coloring initial_coloring(const Graph& g, LabelInterner& interner) {
  auto ids = intern_two_phase({initial_vertex_keys(g)}, interner);
  return {0, std::move(ids.front())};
}

Coloring wl1_step(const Graph& g, const Coloring& c, LabelInterner& interner) {
  auto ids = intern_two_phase({refinement_keys(g.adjacency(), c.labels)}, interner);
  return {c.iteration + 1, std::move(ids.front())};
}

std::vector<Coloring> wl1_colorings(const Graph& g, int h, LabelInterner& interner) {
  const Csr* operand = &g.adjacency();
  std::vector<Coloring> init;
  init.push_back(initial_coloring(g, interner));
  return std::move(refine_batch(std::span(&operand, 1), std::move(init), h, interner).front());
}

FeatureVector wl1_features(const Graph& g, int h, LabelInterner& interner) {
  FeatureVector fv;
  for (const auto& c : wl1_colorings(g, h, interner)) fv.blocks.push_back(histogram(c));
  return fv;
}

std::vector<FeatureVector> wl1_dataset_features(std::span<const Graph> graphs, int h, LabelInterner& interner,
                                                unsigned threads) {
  std::vector<std::vector<LabelKey>> init_keys(graphs.size());
  parallel_for(graphs.size(), threads, [&](std::size_t g) { init_keys[g] = initial_vertex_keys(graphs[g]); });
  auto init_ids = intern_two_phase(init_keys, interner, threads);

  std::vector<const Csr*> operands;
  std::vector<Coloring> initial;
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    operands.push_back(&graphs[g].adjacency());
    initial.push_back({0, std::move(init_ids[g])});
  }
  auto colorings = refine_batch(operands, std::move(initial), h, interner, threads);

  std::vector<FeatureVector> out(graphs.size());
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    for (const auto& c : colorings[g]) out[g].blocks.push_back(histogram(c));
  }
  return out;
}

bool distinguishable(const Graph& a, const Graph& b, int h) {
  LabelInterner interner;
  auto init = intern_two_phase({initial_vertex_keys(a), initial_vertex_keys(b)}, interner);
  Coloring ca{0, std::move(init[0])};
  Coloring cb{0, std::move(init[1])};
  std::size_t previous_classes = 0;
  for (int it = 0;; ++it) {
    if (histogram(ca) != histogram(cb)) return true;
    std::vector<LabelId> joint(ca.labels);
    joint.insert(joint.end(), cb.labels.begin(), cb.labels.end());
    std::sort(joint.begin(), joint.end());
    const auto classes = static_cast<std::size_t>(std::unique(joint.begin(), joint.end()) - joint.begin());
    if (it == h || classes == previous_classes) return false;
    previous_classes = classes;
    auto next = intern_two_phase({refinement_keys(a.adjacency(), ca.labels), refinement_keys(b.adjacency(), cb.labels)},
                                 interner);
    ca = {it + 1, std::move(next[0])};
    cb = {it + 1, std::move(next[1])};
  }
}

}  // namespace wlk
