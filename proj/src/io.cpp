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

#include "wlk/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <system_error>

#include "wlk/error.hpp"

namespace wlk {

namespace fs = std::filesystem;

namespace {

struct Line {
  std::size_t number;  // 1-based line number in the file
  std::string text;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

/// Non-blank lines of a file. nullopt when the file does not exist.
std::optional<std::vector<Line>> read_lines(const fs::path& path, bool required) {
  std::ifstream in(path);
  if (!in) {
    if (required) throw IoError("cannot open " + path.string());
    return std::nullopt;
  }
  std::vector<Line> out;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (!trim(text).empty()) out.push_back({number, text});
  }
  return out;
}

[[noreturn]] void fail(const fs::path& path, std::size_t line, const std::string& what) {
  throw FormatError(path.filename().string() + ":" + std::to_string(line) + ": " + what);
}

std::int64_t parse_int(std::string_view field, const fs::path& path, std::size_t line) {
  field = trim(field);
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || end != field.data() + field.size()) {
    fail(path, line, "expected an integer, got '" + std::string(field) + "'");
  }
  return value;
}

std::vector<std::int64_t> single_column(const std::vector<Line>& lines, const fs::path& path) {
  std::vector<std::int64_t> out;
  out.reserve(lines.size());
  for (const auto& l : lines) out.push_back(parse_int(l.text, path, l.number));
  return out;
}

void expect_count(const fs::path& path, std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw FormatError(path.filename().string() + ": has " + std::to_string(got) + " lines but " + what + " implies " +
                      std::to_string(want));
  }
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

void finish(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw IoError("write to " + path.string() + " failed");
}

void check_square(const GramMatrix& k) {
  if (k.rows() != k.cols()) throw ParameterError("gram matrix must be square");
}

}  // namespace

Dataset parse_tu_dataset(const fs::path& dir, std::string_view name) {
  const std::string prefix(name);
  const auto a_path = dir / (prefix + "_A.txt");
  const auto indicator_path = dir / (prefix + "_graph_indicator.txt");
  const auto graph_labels_path = dir / (prefix + "_graph_labels.txt");
  const auto node_labels_path = dir / (prefix + "_node_labels.txt");
  const auto edge_labels_path = dir / (prefix + "_edge_labels.txt");

  const auto indicator = single_column(*read_lines(indicator_path, true), indicator_path);
  const auto classes = single_column(*read_lines(graph_labels_path, true), graph_labels_path);
  const auto a_lines = *read_lines(a_path, true);

  const std::size_t num_nodes = indicator.size();
  const std::size_t num_graphs = classes.size();

  // Graph ids must be 1-based, non-decreasing and cover 1..num_graphs.
  std::vector<std::size_t> first_node(num_graphs + 1, 0);
  std::vector<std::size_t> node_count(num_graphs, 0);
  std::int64_t previous = 0;
  for (std::size_t v = 0; v < num_nodes; ++v) {
    const auto id = indicator[v];
    if (id < 1 || static_cast<std::size_t>(id) > num_graphs) {
      throw FormatError(indicator_path.filename().string() + ": graph id " + std::to_string(id) + " of node " +
                        std::to_string(v + 1) + " outside 1.." + std::to_string(num_graphs));
    }
    if (id < previous) {
      throw FormatError(indicator_path.filename().string() + ": graph ids are not grouped (node " +
                        std::to_string(v + 1) + ")");
    }
    if (id != previous) first_node[static_cast<std::size_t>(id) - 1] = v;
    previous = id;
    ++node_count[static_cast<std::size_t>(id) - 1];
  }
  for (std::size_t g = 0; g < num_graphs; ++g) {
    if (node_count[g] == 0) {
      throw FormatError(indicator_path.filename().string() + ": graph " + std::to_string(g + 1) + " has no nodes");
    }
  }

  std::optional<std::vector<std::int64_t>> node_labels;
  if (auto lines = read_lines(node_labels_path, false)) {
    node_labels = single_column(*lines, node_labels_path);
    expect_count(node_labels_path, node_labels->size(), num_nodes, "the graph indicator");
  }
  std::optional<std::vector<std::int64_t>> edge_labels;
  if (auto lines = read_lines(edge_labels_path, false)) {
    edge_labels = single_column(*lines, edge_labels_path);
    expect_count(edge_labels_path, edge_labels->size(), a_lines.size(), "the edge list");
  }

  std::vector<std::vector<Edge>> edges(num_graphs);
  std::vector<std::vector<RawLabel>> edge_label_lists(num_graphs);
  for (std::size_t i = 0; i < a_lines.size(); ++i) {
    const auto& l = a_lines[i];
    const std::string_view text = l.text;
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) fail(a_path, l.number, "expected 'i, j'");
    const auto u = parse_int(text.substr(0, comma), a_path, l.number);
    const auto v = parse_int(text.substr(comma + 1), a_path, l.number);
    for (auto id : {u, v}) {
      if (id < 1 || static_cast<std::size_t>(id) > num_nodes) {
        fail(a_path, l.number, "node id " + std::to_string(id) + " outside 1.." + std::to_string(num_nodes));
      }
    }
    const auto gu = indicator[static_cast<std::size_t>(u) - 1];
    const auto gv = indicator[static_cast<std::size_t>(v) - 1];
    if (gu != gv) {
      fail(a_path, l.number,
           "edge joins graph " + std::to_string(gu) + " and graph " + std::to_string(gv));
    }
    if (u == v) fail(a_path, l.number, "self-loop on node " + std::to_string(u));
    const auto g = static_cast<std::size_t>(gu) - 1;
    const auto base = first_node[g];
    edges[g].push_back({static_cast<Vertex>(static_cast<std::size_t>(u) - 1 - base),
                        static_cast<Vertex>(static_cast<std::size_t>(v) - 1 - base)});
    if (edge_labels) edge_label_lists[g].push_back((*edge_labels)[i]);
  }

  Dataset out;
  out.name = prefix;
  out.graphs.reserve(num_graphs);
  for (std::size_t g = 0; g < num_graphs; ++g) {
    std::optional<std::span<const RawLabel>> nl;
    if (node_labels) nl = std::span<const RawLabel>(node_labels->data() + first_node[g], node_count[g]);
    std::optional<std::span<const RawLabel>> el;
    if (edge_labels) el = std::span<const RawLabel>(edge_label_lists[g]);
    try {
      out.graphs.push_back(build_graph(node_count[g], edges[g], nl, el));
    } catch (const ParameterError& e) {
      throw FormatError("graph " + std::to_string(g + 1) + ": " + e.what());
    }
    const int c = static_cast<int>(classes[g]);
    out.graphs.back().set_class_label(c);
    out.class_labels.push_back(c);
  }
  return out;
}

std::string format_value(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 17);
  if (ec != std::errc()) throw Error("number formatting failed");
  return std::string(buffer, end);
}

void write_gram_libsvm(const GramMatrix& k, std::span<const int> classes, std::ostream& out) {
  check_square(k);
  if (classes.size() != static_cast<std::size_t>(k.rows())) {
    throw ParameterError("class list has " + std::to_string(classes.size()) + " entries for a " +
                         std::to_string(k.rows()) + "-row gram matrix");
  }
  for (Eigen::Index i = 0; i < k.rows(); ++i) {
    out << classes[static_cast<std::size_t>(i)] << " 0:" << (i + 1);
    for (Eigen::Index j = 0; j < k.cols(); ++j) out << ' ' << (j + 1) << ':' << format_value(k(i, j));
    out << '\n';
  }
}

void write_gram_libsvm(const GramMatrix& k, std::span<const int> classes, const fs::path& path) {
  auto out = open_output(path);
  write_gram_libsvm(k, classes, out);
  finish(out, path);
}

LibsvmGram read_gram_libsvm(const fs::path& path) {
  const auto lines = *read_lines(path, true);
  LibsvmGram out;
  const auto n = static_cast<Eigen::Index>(lines.size());
  out.matrix = GramMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& l = lines[static_cast<std::size_t>(i)];
    std::istringstream fields(l.text);
    std::string field;
    fields >> field;
    out.classes.push_back(static_cast<int>(parse_int(field, path, l.number)));
    Eigen::Index column = 0;
    while (fields >> field) {
      const auto colon = field.find(':');
      if (colon == std::string::npos) fail(path, l.number, "expected index:value, got '" + field + "'");
      const auto index = parse_int(std::string_view(field).substr(0, colon), path, l.number);
      const std::string_view text = std::string_view(field).substr(colon + 1);
      if (index == 0) {
        if (parse_int(text, path, l.number) != i + 1) fail(path, l.number, "serial index does not match row");
        continue;
      }
      if (index != column + 1 || index > n) fail(path, l.number, "unexpected column index " + std::to_string(index));
      double value = 0.0;
      const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || end != text.data() + text.size()) fail(path, l.number, "bad value '" + field + "'");
      out.matrix(i, column++) = value;
    }
    if (column != n) fail(path, l.number, "row has " + std::to_string(column) + " values, expected " + std::to_string(n));
  }
  return out;
}

void write_gram_csv(const GramMatrix& k, std::ostream& out) {
  for (Eigen::Index i = 0; i < k.rows(); ++i) {
    for (Eigen::Index j = 0; j < k.cols(); ++j) {
      if (j > 0) out << ',';
      out << format_value(k(i, j));
    }
    out << '\n';
  }
}

void write_gram_csv(const GramMatrix& k, const fs::path& path) {
  auto out = open_output(path);
  write_gram_csv(k, out);
  finish(out, path);
}

void write_features_sparse(std::span<const FeatureVector> features, std::span<const int> classes, std::ostream& out) {
  if (classes.size() != features.size()) {
    throw ParameterError("class list has " + std::to_string(classes.size()) + " entries for " +
                         std::to_string(features.size()) + " feature vectors");
  }
  std::uint64_t label_space = 0;
  for (const auto& fv : features) {
    for (const auto& block : fv.blocks) {
      if (!block.empty()) label_space = std::max<std::uint64_t>(label_space, block.rbegin()->first + 1ULL);
    }
  }
  for (std::size_t g = 0; g < features.size(); ++g) {
    out << classes[g];
    const auto& blocks = features[g].blocks;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const std::uint64_t offset = 1 + b * label_space;
      for (const auto& [label, value] : blocks[b]) out << ' ' << (offset + label) << ':' << format_value(value);
    }
    out << '\n';
  }
}

void write_features_sparse(std::span<const FeatureVector> features, std::span<const int> classes,
                           const fs::path& path) {
  auto out = open_output(path);
  write_features_sparse(features, classes, out);
  finish(out, path);
}

}  // namespace wlk
