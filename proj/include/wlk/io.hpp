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

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wlk/feature_vector.hpp"
#include "wlk/graph.hpp"
#include "wlk/kernel.hpp"

namespace wlk {

/// Reads a dataset in the TU collection text layout from `dir`:
///   NAME_A.txt               "i, j" per line, global 1-based node ids
///   NAME_graph_indicator.txt one 1-based graph id per node
///   NAME_graph_labels.txt    one class per graph
///   NAME_node_labels.txt     optional, one label per node
///   NAME_edge_labels.txt     optional, one label per line of NAME_A.txt
/// Edges may be listed in one or both directions. Throws FormatError on
/// malformed or inconsistent content and IoError when a mandatory file
/// cannot be opened.
Dataset parse_tu_dataset(const std::filesystem::path& dir, std::string_view name);

/// Shortest-round-trip-safe formatting used by every exporter (%.17g).
std::string format_value(double value);

/// Precomputed-kernel rows: "<class> 0:<i> 1:<K_i1> ... n:<K_in>".
void write_gram_libsvm(const GramMatrix& k, std::span<const int> classes, std::ostream& out);
void write_gram_libsvm(const GramMatrix& k, std::span<const int> classes, const std::filesystem::path& path);

struct LibsvmGram {
  GramMatrix matrix;
  std::vector<int> classes;
};
LibsvmGram read_gram_libsvm(const std::filesystem::path& path);

/// Plain comma-separated rows, no header.
void write_gram_csv(const GramMatrix& k, std::ostream& out);
void write_gram_csv(const GramMatrix& k, const std::filesystem::path& path);

/// One line per graph, "<class> <index>:<value> ...". The index of label c
/// in block b is 1 + b * L + c, where L is one past the largest label id
/// found in `features`, so indices are ascending and start at 1.
void write_features_sparse(std::span<const FeatureVector> features, std::span<const int> classes, std::ostream& out);
void write_features_sparse(std::span<const FeatureVector> features, std::span<const int> classes,
                           const std::filesystem::path& path);

}  // namespace wlk
