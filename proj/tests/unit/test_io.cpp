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

#include <doctest.h>

#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "tempdir.hpp"
#include "wlk/error.hpp"
#include "wlk/io.hpp"

using namespace wlk;
using wlk::test::TempDir;

namespace {

void write_two_triangles(const TempDir& dir) {
  dir.write("TT_A.txt", "1, 2\n2, 1\n2, 3\n3, 2\n1, 3\n3, 1\n4, 5\n5, 4\n5,6\n6,5\n4, 6\n6, 4\n");
  dir.write("TT_graph_indicator.txt", "1\n1\n1\n2\n2\n2\n");
  dir.write("TT_graph_labels.txt", "1\n-1\n");
}

}  // namespace

TEST_CASE("two-triangle fixture") {
  TempDir dir;
  write_two_triangles(dir);
  const auto data = parse_tu_dataset(dir.path(), "TT");
  REQUIRE(data.size() == 2);
  for (const auto& g : data.graphs) {
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 3);
    CHECK_FALSE(g.has_node_labels());
    CHECK_FALSE(g.has_edge_labels());
  }
  CHECK(data.class_labels == std::vector<int>{1, -1});
  CHECK(data.graphs[1].class_label() == -1);
  auto first = data.graphs[0];
  first.set_class_label(std::nullopt);
  CHECK(first == wlk::test::triangle());
}

TEST_CASE("one-directional edge lists and labels") {
  TempDir dir;
  dir.write("X_A.txt", "1, 2\n2,3\n\n");
  dir.write("X_graph_indicator.txt", "1\n1\n1\n");
  dir.write("X_graph_labels.txt", "0\n");
  dir.write("X_node_labels.txt", "5\n6\n5\n");
  dir.write("X_edge_labels.txt", "1\n2\n");
  const auto data = parse_tu_dataset(dir.path(), "X");
  REQUIRE(data.size() == 1);
  const auto& g = data.graphs[0];
  CHECK(g.num_edges() == 2);
  CHECK(g.node_label(1) == 6);
  CHECK(g.edge_label(2, 1) == 2);
}

TEST_CASE("format errors") {
  TempDir dir;
  write_two_triangles(dir);

  SUBCASE("zero-based node id") {
    dir.write("TT_A.txt", "0, 1\n");
    CHECK_THROWS_AS(parse_tu_dataset(dir.path(), "TT"), FormatError);
  }
  SUBCASE("edge across graphs names the line") {
    dir.write("TT_A.txt", "1, 2\n3, 4\n");
    try {
      parse_tu_dataset(dir.path(), "TT");
      FAIL("expected a format error");
    } catch (const FormatError& e) {
      CHECK(std::string(e.what()).find("TT_A.txt:2") != std::string::npos);
    }
  }
  SUBCASE("node label count mismatch") {
    dir.write("TT_node_labels.txt", "1\n2\n");
    CHECK_THROWS_AS(parse_tu_dataset(dir.path(), "TT"), FormatError);
  }
  SUBCASE("edge label count mismatch") {
    dir.write("TT_edge_labels.txt", "1\n");
    CHECK_THROWS_AS(parse_tu_dataset(dir.path(), "TT"), FormatError);
  }
  SUBCASE("graph id beyond the class list") {
    dir.write("TT_graph_indicator.txt", "1\n1\n1\n2\n2\n3\n");
    CHECK_THROWS_AS(parse_tu_dataset(dir.path(), "TT"), FormatError);
  }
  SUBCASE("garbage row") {
    dir.write("TT_A.txt", "1 2\n");
    CHECK_THROWS_AS(parse_tu_dataset(dir.path(), "TT"), FormatError);
  }
  SUBCASE("missing mandatory file") {
    CHECK_THROWS_AS(parse_tu_dataset(dir.path(), "NOPE"), IoError);
  }
}

TEST_CASE("parsing is deterministic") {
  TempDir dir;
  write_two_triangles(dir);
  CHECK(parse_tu_dataset(dir.path(), "TT").graphs == parse_tu_dataset(dir.path(), "TT").graphs);
}

TEST_CASE("MUTAG statistics") {
  const auto data = parse_tu_dataset(WLK_DATA_DIR "/MUTAG", "MUTAG");
  REQUIRE(data.size() == 188);
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::set<RawLabel> labels;
  for (const auto& g : data.graphs) {
    nodes += g.num_vertices();
    edges += g.num_edges();
    labels.insert(g.node_labels().begin(), g.node_labels().end());
    CHECK(g.has_edge_labels());
  }
  CHECK(std::abs(nodes / 188.0 - 17.9) <= 0.05);
  CHECK(std::abs(edges / 188.0 - 19.8) <= 0.05);
  CHECK(labels.size() == 7);
  CHECK(std::set<int>(data.class_labels.begin(), data.class_labels.end()).size() == 2);
}

TEST_CASE("number formatting") {
  CHECK(format_value(1.0) == "1");
  CHECK(format_value(0.1) == "0.10000000000000001");
  CHECK(format_value(-2.5) == "-2.5");
}

TEST_CASE("precomputed-kernel export") {
  std::ostringstream one;
  write_gram_libsvm(GramMatrix::Identity(1, 1), std::vector<int>{1}, one);
  CHECK(one.str() == "1 0:1 1:1\n");

  std::ostringstream two;
  write_gram_libsvm(GramMatrix::Ones(2, 2), std::vector<int>{1, -1}, two);
  CHECK(two.str() == "1 0:1 1:1 2:1\n-1 0:2 1:1 2:1\n");

  std::ostringstream bad;
  CHECK_THROWS_AS(write_gram_libsvm(GramMatrix::Ones(2, 2), std::vector<int>{1}, bad), ParameterError);
}

TEST_CASE("precomputed-kernel round trip") {
  TempDir dir;
  GramMatrix k(3, 3);
  k << 1.0, 1.0 / 3.0, 2e-17, 1.0 / 3.0, 0.7, 3.14159, 2e-17, 3.14159, 12345.678;
  const std::vector<int> classes{1, -1, 2};
  write_gram_libsvm(k, classes, dir / "k.txt");
  const auto back = read_gram_libsvm(dir / "k.txt");
  CHECK(back.classes == classes);
  CHECK(back.matrix == k);
  write_gram_libsvm(k, classes, dir / "k2.txt");
  CHECK(wlk::test::slurp(dir / "k.txt") == wlk::test::slurp(dir / "k2.txt"));
}

TEST_CASE("unwritable output path") {
  CHECK_THROWS_AS(write_gram_libsvm(GramMatrix::Identity(1, 1), std::vector<int>{1}, "/nonexistent/dir/k.txt"),
                  IoError);
  CHECK_THROWS_AS(write_gram_csv(GramMatrix::Identity(1, 1), "/nonexistent/dir/k.csv"), IoError);
}

TEST_CASE("CSV export") {
  GramMatrix k(2, 2);
  k << 1, 0.5, 0.5, 2;
  std::ostringstream out;
  write_gram_csv(k, out);
  CHECK(out.str() == "1,0.5\n0.5,2\n");
}

TEST_CASE("sparse feature export") {
  std::vector<FeatureVector> fvs(3);
  fvs[0].blocks = {{}, {}};
  fvs[1].blocks = {{{0, 2.0}}, {{1, 1.0}}};
  fvs[2].blocks = {{{1, 0.5}}, {{0, 4.0}, {1, 1.0}}};
  std::ostringstream out;
  write_features_sparse(fvs, std::vector<int>{1, -1, 1}, out);
  // Largest label id is 1, so each block spans two indices: block 0 -> 1..2, block 1 -> 3..4.
  CHECK(out.str() == "1\n-1 1:2 4:1\n1 2:0.5 3:4 4:1\n");
}
