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
#include <vector>

#include "wlk/feature_vector.hpp"
#include "wlk/graph.hpp"
#include "wlk/interner.hpp"

namespace wlk {

// ---------------------------------------------------------------------------
// Generic refinement over an item graph.
//
// Every refinement in this library (1-WL on vertices, k-GWL and k-LWL on
// k-sets) is the same update: the new label of item i is the interned key
// (label of i, sorted labels of operand.row(i)). Interning follows a two
// phase protocol: keys are computed independently per item (in parallel
// across graphs), then all fresh keys of the step are interned in ascending
// key order. Label ids are therefore independent of the worker count.
// ---------------------------------------------------------------------------

/// Interns every key of every graph in ascending key order and returns the
/// ids, shaped like the input.
std::vector<std::vector<LabelId>> intern_two_phase(const std::vector<std::vector<LabelKey>>& keys,
                                                   LabelInterner& interner, unsigned threads = 1);

/// Refinement keys of one step on a single operand.
std::vector<LabelKey> refinement_keys(const Csr& operand, std::span<const LabelId> labels);

/// Exactly h refinement steps (no early stop) for a batch of operands
/// sharing one interner. result[g][i] is the coloring of graph g after i steps.
std::vector<std::vector<Coloring>> refine_batch(std::span<const Csr* const> operands,
                                                std::vector<Coloring> initial, int h, LabelInterner& interner,
                                                unsigned threads = 1);

/// Histogram of a coloring.
SparseBlock histogram(const Coloring& coloring);

/// Relabels ids by first occurrence so two colorings with equal partitions
/// compare equal, whatever ids they use.
std::vector<std::uint32_t> canonical_partition(std::span<const LabelId> labels);

/// True if every class of `finer` lies inside one class of `coarser`.
bool refines(std::span<const LabelId> finer, std::span<const LabelId> coarser);

// ---------------------------------------------------------------------------
// 1-WL
// ---------------------------------------------------------------------------

/// Raw node labels if present, else vertex degrees.
Coloring initial_coloring(const Graph& g, LabelInterner& interner);
std::vector<LabelKey> initial_vertex_keys(const Graph& g);

Coloring wl1_step(const Graph& g, const Coloring& c, LabelInterner& interner);

/// Colorings after 0..h steps.
std::vector<Coloring> wl1_colorings(const Graph& g, int h, LabelInterner& interner);

/// Per-iteration histograms phi^0 .. phi^h.
FeatureVector wl1_features(const Graph& g, int h, LabelInterner& interner);

/// Feature vectors of a whole dataset against one interner.
std::vector<FeatureVector> wl1_dataset_features(std::span<const Graph> graphs, int h, LabelInterner& interner,
                                                unsigned threads = 1);

/// Colour-refinement isomorphism heuristic: true once the two graphs show
/// different label counts within h steps. Stops early when the joint
/// partition is stable. A false result does not imply isomorphism.
bool distinguishable(const Graph& a, const Graph& b, int h);

}  // namespace wlk
