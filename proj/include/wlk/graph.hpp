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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wlk {

using Vertex = std::uint32_t;
using RawLabel = std::int64_t;

/// Compressed sparse row adjacency: row i spans targets[offsets[i], offsets[i+1]).
struct Csr {
  std::vector<std::size_t> offsets{0};
  std::vector<std::uint32_t> targets;

  std::size_t rows() const { return offsets.size() - 1; }
  std::size_t nnz() const { return targets.size(); }
  std::span<const std::uint32_t> row(std::size_t i) const {
    return {targets.data() + offsets[i], offsets[i + 1] - offsets[i]};
  }

  friend bool operator==(const Csr&, const Csr&) = default;
};

struct Edge {
  Vertex u;
  Vertex v;
};

/// Immutable undirected simple graph with optional discrete node and edge labels.
///
/// Neighbor lists are strictly ascending. Edge labels, when present, are
/// stored parallel to the neighbor array so both directions carry the label.
class Graph {
 public:
  Graph() = default;

  std::size_t num_vertices() const { return adjacency_.rows(); }
  std::size_t num_edges() const { return adjacency_.nnz() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;
  std::size_t max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;

  bool has_node_labels() const { return node_labeled_; }
  bool has_edge_labels() const { return edge_labeled_; }
  RawLabel node_label(Vertex v) const;
  /// Label of edge {u, v}; nullopt if the edge is absent or the graph has no edge labels.
  std::optional<RawLabel> edge_label(Vertex u, Vertex v) const;

  std::span<const RawLabel> node_labels() const { return node_labels_; }
  const Csr& adjacency() const { return adjacency_; }
  std::vector<Edge> edges() const;

  std::optional<int> class_label() const { return class_label_; }
  void set_class_label(std::optional<int> c) { class_label_ = c; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::size_t, std::span<const Edge>, std::optional<std::span<const RawLabel>>,
                           std::optional<std::span<const RawLabel>>);

  void check_vertex(Vertex v) const;

  Csr adjacency_;
  std::vector<RawLabel> node_labels_;
  std::vector<RawLabel> edge_labels_;  // parallel to adjacency_.targets
  bool node_labeled_ = false;
  bool edge_labeled_ = false;
  std::optional<int> class_label_;
};

/// Builds a graph from an undirected edge list. Duplicate pairs (in either
/// orientation) collapse to one edge; a duplicate carrying a different edge
/// label is rejected. Throws ParameterError on out-of-range ids or self-loops.
Graph build_graph(std::size_t num_vertices, std::span<const Edge> edges,
                  std::optional<std::span<const RawLabel>> node_labels = std::nullopt,
                  std::optional<std::span<const RawLabel>> edge_labels = std::nullopt);

struct InducedSubgraph {
  Graph graph;
  /// old_ids[new_id] is the vertex of the host graph. Mapping is ascending.
  std::vector<Vertex> old_ids;

  /// New id of a host vertex, nullopt if the vertex is not part of the subgraph.
  std::optional<Vertex> new_id(Vertex old_id) const;
};

/// Subgraph induced by `vertices` (duplicates ignored). Labels are carried
/// over. Cost depends only on the selected vertices and their degrees.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

struct Dataset {
  std::string name;
  std::vector<Graph> graphs;
  std::vector<int> class_labels;

  std::size_t size() const { return graphs.size(); }
};

}  // namespace wlk
