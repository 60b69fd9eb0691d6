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

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "wlk/feature_vector.hpp"
#include "wlk/graph.hpp"
#include "wlk/interner.hpp"

namespace wlk {

/// Strictly ascending tuple of k distinct vertex ids.
using KSet = std::vector<Vertex>;

/// Default cap on C(n, k) for exact k-set computations.
inline constexpr std::uint64_t kDefaultMaxKSets = 50'000'000;

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Dense colexicographic numbering of all k-subsets of [0, n):
/// rank(t) = sum_i C(t_i, i + 1) for ascending t.
class KSetIndex {
 public:
  KSetIndex(std::size_t n, int k);

  std::size_t n() const { return n_; }
  int k() const { return k_; }
  std::uint64_t size() const { return size_; }

  std::uint64_t rank(std::span<const Vertex> t) const;
  void unrank(std::uint64_t r, std::span<Vertex> out) const;
  KSet unrank(std::uint64_t r) const;

 private:
  std::uint64_t choose(std::size_t n, int k) const { return table_[n * (k_ + 1) + k]; }

  std::size_t n_;
  int k_;
  std::uint64_t size_;
  std::vector<std::uint64_t> table_;  // (n + 1) x (k + 1)
};

/// Index over V(g)_k. Throws ParameterError for k < 2.
KSetIndex enumerate_ksets(const Graph& g, int k);

enum class Neighborhood {
  kGlobal,  // replace one element by any outside vertex
  kLocal,   // ... only by a vertex adjacent to some element of the original set
};

/// Lexicographically minimal code over all k! orderings of t:
/// (node labels, upper-triangle adjacency bits, edge labels if the graph has them).
/// Cost is O(k! k^2 log d).
std::vector<std::int64_t> canonical_code(const Graph& g, std::span<const Vertex> t);
LabelKey iso_type_key(const Graph& g, std::span<const Vertex> t);
LabelId iso_type(const Graph& g, std::span<const Vertex> t, LabelInterner& interner);

/// Calls visit(std::span<const Vertex>) once per neighbor k-set of t. The
/// replacement vertex never belongs to t. Order: by replaced position, then
/// by ascending incoming vertex. The span is only valid during the call.
template <typename Visit>
void for_each_neighbor(const Graph& g, std::span<const Vertex> t, Neighborhood kind, Visit&& visit);

std::vector<KSet> global_neighbors(const Graph& g, std::span<const Vertex> t);
std::vector<KSet> local_neighbors(const Graph& g, std::span<const Vertex> t);

/// Directed k-set graph over ranks: row r lists the ranks of the neighbors of unrank(r).
struct KSetGraph {
  KSetIndex index;
  Csr adjacency;
  Neighborhood kind = Neighborhood::kLocal;
};

/// Throws ResourceError when C(n, k) exceeds max_sets.
KSetGraph build_kset_graph(const Graph& g, int k, Neighborhood kind = Neighborhood::kLocal,
                           std::uint64_t max_sets = kDefaultMaxKSets);

/// All k-sets within directed distance c of t in the local k-set graph,
/// found by breadth-first expansion. Sorted; always contains t.
std::vector<KSet> c_neighborhood(const Graph& g, std::span<const Vertex> t, int c);

/// Colorings of all k-sets (indexed by rank) after 0..h steps.
std::vector<Coloring> kset_colorings(const Graph& g, int k, int h, Neighborhood kind, LabelInterner& interner,
                                     std::uint64_t max_sets = kDefaultMaxKSets);

FeatureVector klwl_features(const Graph& g, int k, int h, LabelInterner& interner,
                            std::uint64_t max_sets = kDefaultMaxKSets);
FeatureVector kgwl_features(const Graph& g, int k, int h, LabelInterner& interner,
                            std::uint64_t max_sets = kDefaultMaxKSets);

/// Isomorphism-type keys of all k-sets, indexed by rank.
std::vector<LabelKey> initial_kset_keys(const Graph& g, const KSetIndex& index);

/// Exact features for a dataset against one interner.
std::vector<FeatureVector> kset_dataset_features(std::span<const Graph> graphs, int k, int h, Neighborhood kind,
                                                 LabelInterner& interner, unsigned threads = 1,
                                                 std::uint64_t max_sets = kDefaultMaxKSets);

// ---------------------------------------------------------------------------

template <typename Visit>
void for_each_neighbor(const Graph& g, std::span<const Vertex> t, Neighborhood kind, Visit&& visit) {
  const std::size_t k = t.size();
  auto in_t = [&](Vertex r) {
    for (auto v : t) {
      if (v == r) return true;
    }
    return false;
  };

  std::vector<Vertex> candidates;
  if (kind == Neighborhood::kGlobal) {
    candidates.reserve(g.num_vertices() - k);
    for (Vertex r = 0; r < g.num_vertices(); ++r) {
      if (!in_t(r)) candidates.push_back(r);
    }
  } else {
    for (auto v : t) {
      for (auto r : g.neighbors(v)) {
        if (!in_t(r)) candidates.push_back(r);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  }

  std::vector<Vertex> buffer(k);
  for (std::size_t j = 0; j < k; ++j) {
    for (auto r : candidates) {
      // t without t[j], with r inserted in order.
      std::size_t out = 0;
      bool placed = false;
      for (std::size_t i = 0; i < k; ++i) {
        if (i == j) continue;
        if (!placed && r < t[i]) {
          buffer[out++] = r;
          placed = true;
        }
        buffer[out++] = t[i];
      }
      if (!placed) buffer[out++] = r;
      visit(std::span<const Vertex>(buffer));
    }
  }
}

}  // namespace wlk
