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

#include "wlk/graph.hpp"

#include <algorithm>
#include <string>

#include "wlk/error.hpp"

namespace wlk {

void Graph::check_vertex(Vertex v) const {
  if (v >= num_vertices()) {
    throw ParameterError("vertex id " + std::to_string(v) + " out of range for graph with " +
                         std::to_string(num_vertices()) + " vertices");
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_.row(v);
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  return adjacency_.offsets[v + 1] - adjacency_.offsets[v];
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < num_vertices(); ++v) {
    best = std::max(best, adjacency_.offsets[v + 1] - adjacency_.offsets[v]);
  }
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  auto row = adjacency_.row(u);
  return std::binary_search(row.begin(), row.end(), v);
}

RawLabel Graph::node_label(Vertex v) const {
  check_vertex(v);
  return node_labeled_ ? node_labels_[v] : 0;
}

std::optional<RawLabel> Graph::edge_label(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (!edge_labeled_) return std::nullopt;
  auto row = adjacency_.row(u);
  auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it == row.end() || *it != v) return std::nullopt;
  return edge_labels_[adjacency_.offsets[u] + static_cast<std::size_t>(it - row.begin())];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : adjacency_.row(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph build_graph(std::size_t num_vertices, std::span<const Edge> edges,
                  std::optional<std::span<const RawLabel>> node_labels,
                  std::optional<std::span<const RawLabel>> edge_labels) {
  if (node_labels && node_labels->size() != num_vertices) {
    throw ParameterError("node label count " + std::to_string(node_labels->size()) +
                         " does not match vertex count " + std::to_string(num_vertices));
  }
  if (edge_labels && edge_labels->size() != edges.size()) {
    throw ParameterError("edge label count " + std::to_string(edge_labels->size()) +
                         " does not match edge count " + std::to_string(edges.size()));
  }

  struct Arc {
    Vertex from;
    Vertex to;
    RawLabel label;
  };
  std::vector<Arc> arcs;
  arcs.reserve(2 * edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u >= num_vertices || v >= num_vertices) {
      throw ParameterError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                           ") references a vertex outside [0, " + std::to_string(num_vertices) + ")");
    }
    if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
    RawLabel label = edge_labels ? (*edge_labels)[i] : 0;
    arcs.push_back({u, v, label});
    arcs.push_back({v, u, label});
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });

  Graph g;
  g.adjacency_.offsets.assign(num_vertices + 1, 0);
  g.adjacency_.targets.reserve(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i > 0 && arcs[i].from == arcs[i - 1].from && arcs[i].to == arcs[i - 1].to) {
      if (arcs[i].label != arcs[i - 1].label) {
        throw ParameterError("edge (" + std::to_string(arcs[i].from) + ", " + std::to_string(arcs[i].to) +
                             ") listed with conflicting labels");
      }
      continue;
    }
    g.adjacency_.targets.push_back(arcs[i].to);
    if (edge_labels) g.edge_labels_.push_back(arcs[i].label);
    ++g.adjacency_.offsets[arcs[i].from + 1];
  }
  for (std::size_t v = 0; v < num_vertices; ++v) g.adjacency_.offsets[v + 1] += g.adjacency_.offsets[v];

  if (node_labels) {
    g.node_labels_.assign(node_labels->begin(), node_labels->end());
    g.node_labeled_ = true;
  }
  g.edge_labeled_ = edge_labels.has_value();
  return g;
}

std::optional<Vertex> InducedSubgraph::new_id(Vertex old_id) const {
  auto it = std::lower_bound(old_ids.begin(), old_ids.end(), old_id);
  if (it == old_ids.end() || *it != old_id) return std::nullopt;
  return static_cast<Vertex>(it - old_ids.begin());
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  InducedSubgraph out;
  out.old_ids.assign(vertices.begin(), vertices.end());
  std::sort(out.old_ids.begin(), out.old_ids.end());
  out.old_ids.erase(std::unique(out.old_ids.begin(), out.old_ids.end()), out.old_ids.end());
  if (!out.old_ids.empty() && out.old_ids.back() >= g.num_vertices()) {
    throw ParameterError("induced_subgraph: vertex " + std::to_string(out.old_ids.back()) + " not in graph");
  }

  std::vector<Edge> edges;
  std::vector<RawLabel> edge_labels;
  for (Vertex nu = 0; nu < out.old_ids.size(); ++nu) {
    Vertex u = out.old_ids[nu];
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      auto nv = out.new_id(v);
      if (!nv) continue;
      edges.push_back({nu, *nv});
      if (g.has_edge_labels()) edge_labels.push_back(*g.edge_label(u, v));
    }
  }

  std::vector<RawLabel> node_labels;
  if (g.has_node_labels()) {
    node_labels.reserve(out.old_ids.size());
    for (Vertex u : out.old_ids) node_labels.push_back(g.node_label(u));
  }

  out.graph = build_graph(out.old_ids.size(), edges,
                          g.has_node_labels() ? std::optional<std::span<const RawLabel>>(node_labels) : std::nullopt,
                          g.has_edge_labels() ? std::optional<std::span<const RawLabel>>(edge_labels) : std::nullopt);
  out.graph.set_class_label(g.class_label());
  return out;
}

}  // namespace wlk
