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

#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "wlk/error.hpp"
#include "wlk/refine.hpp"

using namespace wlk;

namespace {

std::size_t class_count(const Coloring& c) { return std::set<LabelId>(c.labels.begin(), c.labels.end()).size(); }

std::multiset<double> counts(const SparseBlock& block) {
  std::multiset<double> out;
  for (const auto& [label, weight] : block) out.insert(weight);
  return out;
}

}  // namespace

TEST_CASE("interner is idempotent and injective") {
  LabelInterner interner;
  const std::vector<LabelId> nb{1, 2};
  const auto a = interner.intern(LabelKey::refine(3, nb));
  CHECK(interner.intern(LabelKey::refine(3, nb)) == a);
  const std::vector<LabelId> other{1, 3};
  const auto b = interner.intern(LabelKey::refine(3, other));
  CHECK(b == a + 1);
  CHECK(interner.size() == 2);
  CHECK(interner.find(LabelKey::refine(3, nb)) == a);
  CHECK_FALSE(interner.find(LabelKey::degree(4)).has_value());
  CHECK(interner.key(b) == LabelKey::refine(3, other));
}

TEST_CASE("interner separates key kinds") {
  LabelInterner interner;
  const auto raw = interner.intern(LabelKey::raw_label(2));
  const auto deg = interner.intern(LabelKey::degree(2));
  CHECK(raw != deg);
}

TEST_CASE("batch interning follows key order, not arrival order") {
  LabelInterner first;
  LabelInterner second;
  std::vector<LabelKey> keys{LabelKey::degree(5), LabelKey::degree(1), LabelKey::degree(3), LabelKey::degree(1)};
  first.intern_batch(keys);
  std::reverse(keys.begin(), keys.end());
  second.intern_batch(keys);
  CHECK(first.size() == 3);
  for (LabelId id = 0; id < 3; ++id) CHECK(first.key(id) == second.key(id));
  CHECK(first.find(LabelKey::degree(1)) == 0);
}

TEST_CASE("initial colorings") {
  LabelInterner interner;
  const auto tri = initial_coloring(wlk::test::triangle(), interner);
  CHECK(class_count(tri) == 1);

  const auto p3 = initial_coloring(wlk::test::path_graph(3), interner);
  CHECK(p3.labels[0] == p3.labels[2]);
  CHECK(p3.labels[0] != p3.labels[1]);

  const auto labeled = wlk::test::make_graph(2, {{0, 1}}, std::vector<RawLabel>{4, 9});
  const auto c = initial_coloring(labeled, interner);
  CHECK(c.labels[0] != c.labels[1]);
}

TEST_CASE("one step on a path splits ends from middle") {
  LabelInterner interner;
  const auto p3 = wlk::test::path_graph(3);
  Coloring uniform{0, {0, 0, 0}};
  interner.intern(LabelKey::degree(0));
  const auto next = wl1_step(p3, uniform, interner);
  CHECK(class_count(next) == 2);
  CHECK(next.labels[0] == next.labels[2]);
  CHECK(histogram(next).size() == 2);
  CHECK(counts(histogram(next)) == std::multiset<double>{1, 2});
}

TEST_CASE("cycle never splits") {
  LabelInterner interner;
  const auto colorings = wl1_colorings(wlk::test::cycle_graph(6), 6, interner);
  for (const auto& c : colorings) CHECK(class_count(c) == 1);
}

TEST_CASE("isolated vertex refines against the empty tuple") {
  LabelInterner interner;
  const auto g = wlk::test::make_graph(1, {});
  const auto colorings = wl1_colorings(g, 2, interner);
  const auto& key = interner.key(colorings[1].labels[0]);
  CHECK(key.kind() == LabelKey::Kind::kRefine);
  CHECK(key.previous() == colorings[0].labels[0]);
  CHECK(key.neighbor_words().empty());
}

TEST_CASE("triangle features have one bucket of three per block") {
  LabelInterner interner;
  const auto fv = wl1_features(wlk::test::triangle(), 2, interner);
  REQUIRE(fv.blocks.size() == 3);
  for (const auto& block : fv.blocks) CHECK(counts(block) == std::multiset<double>{3});
}

TEST_CASE("path features after one step") {
  LabelInterner interner;
  const auto fv = wl1_features(wlk::test::path_graph(3), 1, interner);
  REQUIRE(fv.blocks.size() == 2);
  const auto end = interner.find(LabelKey::degree(1));
  const auto mid = interner.find(LabelKey::degree(2));
  REQUIRE(end.has_value());
  REQUIRE(mid.has_value());
  CHECK(fv.blocks[0].at(*end) == 2);
  CHECK(fv.blocks[0].at(*mid) == 1);
  CHECK(counts(fv.blocks[1]) == std::multiset<double>{1, 2});
}

TEST_CASE("hexagon and two triangles share all colour-refinement histograms") {
  LabelInterner interner;
  const auto c6 = wl1_features(wlk::test::cycle_graph(6), 5, interner);
  const auto k3k3 = wl1_features(wlk::test::two_triangles(), 5, interner);
  CHECK(c6 == k3k3);
  CHECK_FALSE(distinguishable(wlk::test::cycle_graph(6), wlk::test::two_triangles(), 5));
}

TEST_CASE("distinguishable separates graphs of different degree profile") {
  CHECK(distinguishable(wlk::test::path_graph(4), wlk::test::star_graph(3), 1));
  CHECK_FALSE(distinguishable(wlk::test::path_graph(4), wlk::test::path_graph(4), 3));
}

TEST_CASE("refinement rejects mismatched label vectors") {
  const auto g = wlk::test::triangle();
  CHECK_THROWS_AS(refinement_keys(g.adjacency(), std::vector<LabelId>{0, 0}), ParameterError);
  LabelInterner interner;
  CHECK_THROWS_AS(wl1_features(g, -1, interner), ParameterError);
}

TEST_CASE("canonical partition and refines") {
  CHECK(canonical_partition(std::vector<LabelId>{7, 3, 7, 9}) == std::vector<std::uint32_t>{0, 1, 0, 2});
  CHECK(refines(std::vector<LabelId>{0, 1, 2, 2}, std::vector<LabelId>{5, 5, 6, 6}));
  CHECK_FALSE(refines(std::vector<LabelId>{0, 0, 1, 1}, std::vector<LabelId>{5, 6, 6, 6}));
}

TEST_CASE("property: partitions match the brute-force oracle") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const double p = std::array{0.2, 0.5, 0.8}[trial % 3];
    const auto g = wlk::test::random_graph(1 + trial % 14, p, rng, trial % 2 ? 3 : 0);
    LabelInterner interner;
    const auto fast = wl1_colorings(g, 4, interner);
    const auto slow = wlk::test::oracle::vertex_refinement(g, 4);
    for (int i = 0; i <= 4; ++i) CHECK(wlk::test::same_partition(fast[i].labels, slow[i]));
  }
}

TEST_CASE("property: monotone refinement, mass conservation, label counts") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = wlk::test::random_graph(3 + trial % 12, 0.3, rng, trial % 3);
    LabelInterner interner;
    const auto colorings = wl1_colorings(g, 5, interner);
    for (std::size_t i = 1; i < colorings.size(); ++i) {
      CHECK(refines(colorings[i].labels, colorings[i - 1].labels));
      CHECK(class_count(colorings[i]) >= class_count(colorings[i - 1]));
    }
    const auto fv = wl1_features(g, 5, interner);
    for (const auto& block : fv.blocks) {
      double mass = 0;
      for (const auto& [label, w] : block) mass += w;
      CHECK(mass == doctest::Approx(static_cast<double>(g.num_vertices())));
    }
  }
}

TEST_CASE("property: features are invariant under vertex renaming") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = wlk::test::random_graph(10, 0.3, rng, 3);
    const auto h = wlk::test::permuted(g, wlk::test::random_permutation(10, rng));
    LabelInterner interner;
    CHECK(wl1_features(g, 4, interner) == wl1_features(h, 4, interner));
  }
}

TEST_CASE("property: dataset label ids do not depend on the worker count") {
  std::mt19937_64 rng(24);
  std::vector<Graph> graphs;
  for (int i = 0; i < 40; ++i) graphs.push_back(wlk::test::random_graph(5 + i % 9, 0.3, rng, 2));
  LabelInterner one;
  LabelInterner four;
  const auto a = wl1_dataset_features(graphs, 4, one, 1);
  const auto b = wl1_dataset_features(graphs, 4, four, 4);
  CHECK(a == b);
  REQUIRE(one.size() == four.size());
  for (LabelId id = 0; id < one.size(); ++id) CHECK(one.key(id) == four.key(id));
}

TEST_CASE("dataset features agree with per-graph features up to relabeling") {
  std::mt19937_64 rng(25);
  std::vector<Graph> graphs;
  for (int i = 0; i < 10; ++i) graphs.push_back(wlk::test::random_graph(8, 0.4, rng));
  LabelInterner shared;
  const auto all = wl1_dataset_features(graphs, 3, shared);
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    LabelInterner own;
    const auto single = wl1_features(graphs[g], 3, own);
    for (int i = 0; i <= 3; ++i) CHECK(counts(single.blocks[i]) == counts(all[g].blocks[i]));
  }
}
