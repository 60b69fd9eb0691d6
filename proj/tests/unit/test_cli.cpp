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

#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "tempdir.hpp"
#include "wlk/io.hpp"

using wlk::test::TempDir;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = wlk::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kMutag = WLK_DATA_DIR "/MUTAG";

void write_two_triangles(const TempDir& dir) {
  dir.write("TT_A.txt", "1, 2\n2, 1\n2, 3\n3, 2\n1, 3\n3, 1\n4, 5\n5, 4\n5, 6\n6, 5\n4, 6\n6, 4\n");
  dir.write("TT_graph_indicator.txt", "1\n1\n1\n2\n2\n2\n");
  dir.write("TT_graph_labels.txt", "1\n1\n");
}

}  // namespace

TEST_CASE("info on MUTAG") {
  const auto r = run({"info", "--dataset", kMutag});
  CHECK(r.code == 0);
  CHECK(r.out.find("graphs: 188") != std::string::npos);
  CHECK(r.out.find("avg nodes: 17.9") != std::string::npos);
  CHECK(r.out.find("avg edges: 19.8") != std::string::npos);
  CHECK(r.out.find("classes: 2") != std::string::npos);
}

TEST_CASE("sample-size") {
  auto r = run({"sample-size", "--gamma", "10", "--delta", "0.1", "--epsilon", "0.1"});
  CHECK(r.code == 0);
  CHECK(r.out == "26492\n");
  r = run({"sample-size", "--gamma", "10", "--delta", "0.1", "--epsilon", "0.1", "--dataset-size", "100"});
  CHECK(r.out == "49518\n");
  r = run({"sample-size", "--gamma", "10", "--delta", "2"});
  CHECK(r.code == 1);
}

TEST_CASE("identical graphs give an all-ones normalized gram") {
  TempDir dir;
  write_two_triangles(dir);
  const auto out = (dir / "k.txt").string();
  const auto r = run({"gram", "--dataset", dir.path().string(), "--name", "TT", "--kernel", "kwl-local", "--k", "2",
                      "--h", "5", "--mode", "exact", "--gram-normalize", "--output", out});
  REQUIRE(r.code == 0);
  const auto k = wlk::read_gram_libsvm(out);
  CHECK(k.matrix.rows() == 2);
  CHECK((k.matrix.array() == 1.0).all());

  const auto manifest = nlohmann::json::parse(wlk::test::slurp(out + ".manifest.json"));
  CHECK(manifest["config"]["kernel"] == "kwl-local");
  CHECK(manifest["config"]["h"] == 5);
  CHECK(manifest["seed"] == 0);
  CHECK(manifest["timings"].contains("total_s"));
}

TEST_CASE("a rerun from the manifest reproduces the output") {
  TempDir dir;
  const auto out = (dir / "k.txt").string();
  REQUIRE(run({"gram", "--dataset", kMutag, "--kernel", "kwl-local", "--mode", "sampled", "--samples", "40", "--h",
               "2", "--seed", "9", "--output", out})
              .code == 0);
  const auto first = wlk::test::slurp(out);
  const auto manifest = nlohmann::json::parse(wlk::test::slurp(out + ".manifest.json"));
  REQUIRE(run(manifest["rerun"].get<std::vector<std::string>>()).code == 0);
  CHECK(wlk::test::slurp(out) == first);
}

TEST_CASE("h sweep writes one file per iteration count") {
  TempDir dir;
  write_two_triangles(dir);
  const auto r = run({"features", "--dataset", dir.path().string(), "--name", "TT", "--h-sweep", "0..2", "--output",
                      (dir / "f.txt").string()});
  REQUIRE(r.code == 0);
  for (int h = 0; h <= 2; ++h) CHECK(std::filesystem::exists(dir / ("f.h" + std::to_string(h) + ".txt")));
  // Each triangle vertex carries one label per block: h + 1 entries per line.
  CHECK(wlk::test::slurp(dir / "f.h0.txt") == "1 1:3\n1 1:3\n");
}

TEST_CASE("linear-algebra mode matches exact mode on MUTAG") {
  TempDir dir;
  for (const std::string kernel : {"wl1", "kwl-local"}) {
    const auto exact = (dir / ("e-" + kernel)).string();
    const auto la = (dir / ("l-" + kernel)).string();
    REQUIRE(run({"gram", "--dataset", kMutag, "--kernel", kernel, "--h", "3", "--output", exact}).code == 0);
    REQUIRE(run({"gram", "--dataset", kMutag, "--kernel", kernel, "--h", "3", "--mode", "linalg", "--output", la})
                .code == 0);
    CHECK(wlk::read_gram_libsvm(exact).matrix == wlk::read_gram_libsvm(la).matrix);
  }
}

TEST_CASE("exit codes") {
  TempDir dir;
  const auto out = (dir / "x").string();
  CHECK(run({}).code == 1);
  CHECK(run({"gram", "--dataset", kMutag}).code == 1);
  CHECK(run({"gram", "--dataset", kMutag, "--output", out, "--kernel", "nope"}).code == 1);
  CHECK(run({"gram", "--dataset", kMutag, "--output", out, "--mode", "sampled", "--kernel", "kwl-local"}).code == 1);
  CHECK(run({"gram", "--dataset", kMutag, "--output", out, "--mode", "sampled"}).code == 1);
  CHECK(run({"gram", "--dataset", kMutag, "--output", out, "--format", "sparse-features"}).code == 1);
  CHECK(run({"gram", "--dataset", kMutag, "--output", out, "--h-sweep", "3..1"}).code == 1);
  CHECK(run({"gram", "--dataset", (dir / "missing").string(), "--output", out}).code == 2);
  CHECK(run({"gram", "--dataset", kMutag, "--output", "/nonexistent/dir/k"}).code == 2);
  const auto capped = run({"gram", "--dataset", kMutag, "--kernel", "kwl-global", "--k", "3", "--max-ksets", "100",
                           "--output", out});
  CHECK(capped.code == 3);
  CHECK(capped.err.find("sampled") != std::string::npos);
  CHECK(std::count(capped.err.begin(), capped.err.end(), '\n') == 1);
  CHECK(run({"gram", "--dataset", kMutag, "--output", out, "--kernel", "kwl-local", "--mode", "adaptive",
             "--epsilon", "0.01", "--max-samples", "200"})
            .code == 3);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("malformed dataset gives a data error") {
  TempDir dir;
  write_two_triangles(dir);
  dir.write("TT_A.txt", "1, 4\n");
  const auto r = run({"info", "--dataset", dir.path().string(), "--name", "TT"});
  CHECK(r.code == 2);
  CHECK(r.err.find("TT_A.txt:1") != std::string::npos);
}
