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
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "wlk/graph.hpp"

namespace wlk::test {

inline Graph make_graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> pairs,
                        std::optional<std::vector<RawLabel>> node_labels = std::nullopt,
                        std::optional<std::vector<RawLabel>> edge_labels = std::nullopt) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v});
  std::optional<std::span<const RawLabel>> nl;
  if (node_labels) nl = std::span<const RawLabel>(*node_labels);
  std::optional<std::span<const RawLabel>> el;
  if (edge_labels) el = std::span<const RawLabel>(*edge_labels);
  return build_graph(n, edges, nl, el);
}

inline Graph path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return make_graph(n, e);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 0; v < n; ++v) e.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return make_graph(n, e);
}

inline Graph triangle() { return cycle_graph(3); }

/// Two disjoint triangles on 0-1-2 and 3-4-5.
inline Graph two_triangles() { return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}); }

inline Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
  }
  return make_graph(n, e);
}

/// Star with center 0 and `leaves` leaves.
inline Graph star_graph(std::size_t leaves) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 1; v <= leaves; ++v) e.push_back({0, v});
  return make_graph(leaves + 1, e);
}

/// G(n, p), optionally with node labels drawn from [0, label_count).
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng, int label_count = 0,
                          int edge_label_count = 0) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> e;
  std::vector<RawLabel> el;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!coin(rng)) continue;
      e.push_back({u, v});
      if (edge_label_count > 0) el.push_back(std::uniform_int_distribution<RawLabel>(0, edge_label_count - 1)(rng));
    }
  }
  std::optional<std::vector<RawLabel>> nl;
  if (label_count > 0) {
    nl.emplace();
    for (std::size_t v = 0; v < n; ++v) nl->push_back(std::uniform_int_distribution<RawLabel>(0, label_count - 1)(rng));
  }
  std::optional<std::vector<RawLabel>> edge_labels;
  if (edge_label_count > 0) edge_labels = el;
  return make_graph(n, e, nl, edge_labels);
}

/// Simple d-regular graph from the pairing model, retrying on loops and
/// multi-edges. n * d must be even.
inline Graph random_regular(std::size_t n, int d, std::mt19937_64& rng) {
  std::vector<Vertex> stubs;
  for (Vertex v = 0; v < n; ++v) {
    for (int i = 0; i < d; ++i) stubs.push_back(v);
  }
  for (;;) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<std::pair<Vertex, Vertex>> e;
    bool ok = true;
    for (std::size_t i = 0; i < stubs.size() && ok; i += 2) {
      auto u = stubs[i];
      auto v = stubs[i + 1];
      if (u == v) ok = false;
      e.push_back({std::min(u, v), std::max(u, v)});
    }
    if (!ok) continue;
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) continue;
    return make_graph(n, e);
  }
}

/// Same graph with vertex v renamed to perm[v].
inline Graph permuted(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<std::pair<Vertex, Vertex>> e;
  std::vector<RawLabel> el;
  for (const auto& edge : g.edges()) {
    e.push_back({perm[edge.u], perm[edge.v]});
    if (g.has_edge_labels()) el.push_back(*g.edge_label(edge.u, edge.v));
  }
  std::optional<std::vector<RawLabel>> nl;
  if (g.has_node_labels()) {
    nl.emplace(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) (*nl)[perm[v]] = g.node_label(v);
  }
  std::optional<std::vector<RawLabel>> edge_labels;
  if (g.has_edge_labels()) edge_labels = el;
  return make_graph(g.num_vertices(), e, nl, edge_labels);
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// True iff a[i] == a[j] <=> b[i] == b[j] for all i, j.
template <typename A, typename B>
bool same_partition(const std::vector<A>& a, const std::vector<B>& b) {
  if (a.size() != b.size()) return false;
  std::map<A, B> forward;
  std::map<B, A> backward;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [f, f_new] = forward.emplace(a[i], b[i]);
    if (!f_new && f->second != b[i]) return false;
    auto [r, r_new] = backward.emplace(b[i], a[i]);
    if (!r_new && r->second != a[i]) return false;
  }
  return true;
}

}  // namespace wlk::test
