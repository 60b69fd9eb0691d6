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

#include "wlk/kset.hpp"

#include <limits>
#include <numeric>
#include <set>
#include <string>

#include "wlk/error.hpp"
#include "wlk/parallel.hpp"
#include "wlk/refine.hpp"

namespace wlk {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i; split the division to stay in range.
    const std::uint64_t g = std::gcd(result, i);
    const std::uint64_t factor = (n - k + i) / (i / g);
    if (__builtin_mul_overflow(result / g, factor, &result)) return kMax;
  }
  return result;
}

KSetIndex::KSetIndex(std::size_t n, int k) : n_(n), k_(k) {
  if (k < 2) throw ParameterError("k-set order must be at least 2, got " + std::to_string(k));
  table_.resize((n + 1) * static_cast<std::size_t>(k + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    for (int j = 0; j <= k; ++j) table_[i * (k + 1) + j] = binomial(i, static_cast<std::uint64_t>(j));
  }
  size_ = choose(n, k);
}

std::uint64_t KSetIndex::rank(std::span<const Vertex> t) const {
  std::uint64_t r = 0;
  for (int i = 0; i < k_; ++i) r += choose(t[i], i + 1);
  return r;
}

void KSetIndex::unrank(std::uint64_t r, std::span<Vertex> out) const {
  std::size_t hi = n_;
  for (int i = k_; i >= 1; --i) {
    // Largest c < hi with C(c, i) <= r.
    std::size_t c = hi - 1;
    while (choose(c, i) > r) --c;
    out[i - 1] = static_cast<Vertex>(c);
    r -= choose(c, i);
    hi = c;
  }
}

KSet KSetIndex::unrank(std::uint64_t r) const {
  KSet t(static_cast<std::size_t>(k_));
  unrank(r, t);
  return t;
}

KSetIndex enumerate_ksets(const Graph& g, int k) { return KSetIndex(g.num_vertices(), k); }

std::vector<std::int64_t> canonical_code(const Graph& g, std::span<const Vertex> t) {
  const std::size_t k = t.size();
  const bool edge_labels = g.has_edge_labels();

  // Pairwise relation matrix in the original order.
  std::vector<std::int64_t> adjacent(k * k, 0);
  std::vector<std::int64_t> elabel(k * k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      if (!g.has_edge(t[a], t[b])) continue;
      adjacent[a * k + b] = adjacent[b * k + a] = 1;
      if (edge_labels) elabel[a * k + b] = elabel[b * k + a] = *g.edge_label(t[a], t[b]);
    }
  }

  const std::size_t pairs = k * (k - 1) / 2;
  const std::size_t length = k + pairs + (edge_labels ? pairs : 0);
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::int64_t> best;
  std::vector<std::int64_t> code(length);
  do {
    std::size_t pos = 0;
    for (std::size_t a = 0; a < k; ++a) code[pos++] = g.node_label(t[perm[a]]);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) code[pos++] = adjacent[perm[a] * k + perm[b]];
    }
    if (edge_labels) {
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) code[pos++] = elabel[perm[a] * k + perm[b]];
      }
    }
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

LabelKey iso_type_key(const Graph& g, std::span<const Vertex> t) { return LabelKey::iso_type(canonical_code(g, t)); }

LabelId iso_type(const Graph& g, std::span<const Vertex> t, LabelInterner& interner) {
  return interner.intern(iso_type_key(g, t));
}

namespace {

std::vector<KSet> collect_neighbors(const Graph& g, std::span<const Vertex> t, Neighborhood kind) {
  std::vector<KSet> out;
  for_each_neighbor(g, t, kind, [&](std::span<const Vertex> s) { out.emplace_back(s.begin(), s.end()); });
  return out;
}

void check_budget(const Graph& g, int k, std::uint64_t max_sets) {
  const auto sets = binomial(g.num_vertices(), static_cast<std::uint64_t>(k));
  if (sets > max_sets) {
    throw ResourceError("graph with " + std::to_string(g.num_vertices()) + " vertices has " + std::to_string(sets) +
                        " " + std::to_string(k) + "-sets, above the cap of " + std::to_string(max_sets) +
                        "; use the sampled or adaptive mode");
  }
}

}  // namespace

std::vector<KSet> global_neighbors(const Graph& g, std::span<const Vertex> t) {
  return collect_neighbors(g, t, Neighborhood::kGlobal);
}

std::vector<KSet> local_neighbors(const Graph& g, std::span<const Vertex> t) {
  return collect_neighbors(g, t, Neighborhood::kLocal);
}

KSetGraph build_kset_graph(const Graph& g, int k, Neighborhood kind, std::uint64_t max_sets) {
  KSetIndex index = enumerate_ksets(g, k);
  check_budget(g, k, max_sets);
  Csr adjacency;
  adjacency.offsets.reserve(index.size() + 1);
  KSet t(static_cast<std::size_t>(k));
  for (std::uint64_t r = 0; r < index.size(); ++r) {
    index.unrank(r, t);
    for_each_neighbor(g, t, kind, [&](std::span<const Vertex> s) {
      adjacency.targets.push_back(static_cast<std::uint32_t>(index.rank(s)));
    });
    adjacency.offsets.push_back(adjacency.targets.size());
  }
  return {std::move(index), std::move(adjacency), kind};
}

std::vector<KSet> c_neighborhood(const Graph& g, std::span<const Vertex> t, int c) {
  if (c < 0) throw ParameterError("c-neighborhood radius must be non-negative");
  std::set<KSet> seen{KSet(t.begin(), t.end())};
  std::vector<KSet> frontier{KSet(t.begin(), t.end())};
  for (int d = 0; d < c && !frontier.empty(); ++d) {
    std::vector<KSet> next;
    for (const auto& s : frontier) {
      for_each_neighbor(g, s, Neighborhood::kLocal, [&](std::span<const Vertex> u) {
        KSet candidate(u.begin(), u.end());
        if (seen.insert(candidate).second) next.push_back(std::move(candidate));
      });
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<LabelKey> initial_kset_keys(const Graph& g, const KSetIndex& index) {
  std::vector<LabelKey> keys;
  keys.reserve(index.size());
  KSet t(static_cast<std::size_t>(index.k()));
  for (std::uint64_t r = 0; r < index.size(); ++r) {
    index.unrank(r, t);
    keys.push_back(iso_type_key(g, t));
  }
  return keys;
}

std::vector<Coloring> kset_colorings(const Graph& g, int k, int h, Neighborhood kind, LabelInterner& interner,
                                     std::uint64_t max_sets) {
  auto kg = build_kset_graph(g, k, kind, max_sets);
  auto init = intern_two_phase({initial_kset_keys(g, kg.index)}, interner);
  const Csr* operand = &kg.adjacency;
  std::vector<Coloring> initial;
  initial.push_back({0, std::move(init.front())});
  return std::move(refine_batch(std::span(&operand, 1), std::move(initial), h, interner).front());
}

namespace {

FeatureVector features_from(const std::vector<Coloring>& colorings) {
  FeatureVector fv;
  for (const auto& c : colorings) fv.blocks.push_back(histogram(c));
  return fv;
}

}  // namespace

FeatureVector klwl_features(const Graph& g, int k, int h, LabelInterner& interner, std::uint64_t max_sets) {
  return features_from(kset_colorings(g, k, h, Neighborhood::kLocal, interner, max_sets));
}

FeatureVector kgwl_features(const Graph& g, int k, int h, LabelInterner& interner, std::uint64_t max_sets) {
  return features_from(kset_colorings(g, k, h, Neighborhood::kGlobal, interner, max_sets));
}

std::vector<FeatureVector> kset_dataset_features(std::span<const Graph> graphs, int k, int h, Neighborhood kind,
                                                 LabelInterner& interner, unsigned threads, std::uint64_t max_sets) {
  if (k < 2) throw ParameterError("k-set order must be at least 2, got " + std::to_string(k));
  for (const auto& g : graphs) check_budget(g, k, max_sets);

  std::vector<KSetGraph> kgraphs;
  kgraphs.reserve(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) kgraphs.push_back({KSetIndex(0, k), {}, kind});
  std::vector<std::vector<LabelKey>> init_keys(graphs.size());
  parallel_for(graphs.size(), threads, [&](std::size_t i) {
    kgraphs[i] = build_kset_graph(graphs[i], k, kind, max_sets);
    init_keys[i] = initial_kset_keys(graphs[i], kgraphs[i].index);
  });
  auto init_ids = intern_two_phase(init_keys, interner, threads);
  init_keys.clear();

  std::vector<const Csr*> operands;
  std::vector<Coloring> initial;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    operands.push_back(&kgraphs[i].adjacency);
    initial.push_back({0, std::move(init_ids[i])});
  }
  auto colorings = refine_batch(operands, std::move(initial), h, interner, threads);

  std::vector<FeatureVector> out;
  out.reserve(graphs.size());
  for (const auto& c : colorings) out.push_back(features_from(c));
  return out;
}

}  // namespace wlk
