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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "wlk/approx.hpp"
#include "wlk/error.hpp"
#include "wlk/io.hpp"
#include "wlk/kernel.hpp"
#include "wlk/kset.hpp"
#include "wlk/linalg.hpp"
#include "wlk/refine.hpp"

namespace wlk::cli {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct RunConfig {
  std::string command;
  std::string dataset;
  std::string name;
  std::string kernel = "wl1";
  int k = 2;
  int h = 3;
  std::string mode = "exact";
  double epsilon = 0.1;
  double delta = 0.1;
  std::optional<std::uint64_t> gamma;
  std::optional<std::uint64_t> samples;
  std::uint64_t initial_samples = 100;
  double growth = 2.0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string normalize = "none";
  bool gram_normalize = false;
  std::string output;
  std::string format;
  std::string h_sweep;
  std::uint64_t max_ksets = kDefaultMaxKSets;
  std::uint64_t max_samples = 10'000'000;
  bool strict_delta = false;
  std::string la_mode = "paired";
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Per-graph sampler seed, a fixed function of the run seed and graph index.
std::uint64_t graph_seed(std::uint64_t seed, std::size_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::pair<int, int> parse_sweep(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ParameterError("--h-sweep expects FIRST..LAST, got '" + text + "'");
  try {
    std::size_t used = 0;
    const int first = std::stoi(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument("trailing");
    const auto tail = text.substr(dots + 2);
    const int last = std::stoi(tail, &used);
    if (used != tail.size()) throw std::invalid_argument("trailing");
    if (first < 0 || last < first) throw ParameterError("--h-sweep range must satisfy 0 <= FIRST <= LAST");
    return {first, last};
  } catch (const std::logic_error&) {
    throw ParameterError("--h-sweep expects FIRST..LAST, got '" + text + "'");
  }
}

bool is_kset_kernel(const RunConfig& c) { return c.kernel != "wl1"; }

void check_probability(double value, const char* flag, bool closed_top) {
  const bool ok = value > 0.0 && (closed_top ? value <= 1.0 : value < 1.0);
  if (!ok) throw ParameterError(std::string(flag) + " must lie in (0, 1" + (closed_top ? "]" : ")"));
}

/// Every check that does not need the dataset, run before any work starts.
void validate(RunConfig& c) {
  if (c.threads < 1) throw ParameterError("--threads must be at least 1");
  if (c.dataset.empty()) throw ParameterError("--dataset is required");
  if (c.name.empty()) c.name = fs::path(c.dataset).lexically_normal().filename().string();
  if (c.name.empty()) c.name = fs::path(c.dataset).lexically_normal().parent_path().filename().string();
  if (c.command == "info") return;

  if (c.output.empty()) throw ParameterError("--output is required");
  if (c.h < 0) throw ParameterError("--h must be non-negative");
  if (!c.h_sweep.empty()) c.h = parse_sweep(c.h_sweep).second;
  if (is_kset_kernel(c) && c.k < 2) throw ParameterError("--k must be at least 2 for k-set kernels");

  if (c.format.empty()) c.format = c.command == "gram" ? "libsvm" : "sparse-features";
  if (c.command == "gram" && c.format == "sparse-features") {
    throw ParameterError("gram output supports --format libsvm or csv");
  }
  if (c.command == "features" && c.format != "sparse-features") {
    throw ParameterError("features output supports --format sparse-features only");
  }

  if (c.mode == "sampled" || c.mode == "adaptive") {
    if (c.kernel != "kwl-local") throw ParameterError("--mode " + c.mode + " requires --kernel kwl-local");
    check_probability(c.epsilon, "--epsilon", true);
    check_probability(c.delta, "--delta", false);
  }
  if (c.mode == "sampled") {
    if (c.samples && c.gamma) throw ParameterError("give either --samples or --gamma, not both");
    if (!c.samples && !c.gamma) throw ParameterError("--mode sampled needs --samples or --gamma");
    if (c.samples && *c.samples < 1) throw ParameterError("--samples must be at least 1");
    if (c.gamma && *c.gamma < 1) throw ParameterError("--gamma must be at least 1");
  }
  if (c.mode == "adaptive") {
    if (c.initial_samples < 1) throw ParameterError("--initial-samples must be at least 1");
    if (!(c.growth >= 1.0)) throw ParameterError("--growth must be at least 1");
    if (c.max_samples < c.initial_samples) throw ParameterError("--max-samples is below --initial-samples");
  }
}

Json config_json(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  j["dataset"] = c.dataset;
  j["name"] = c.name;
  j["kernel"] = c.kernel;
  j["k"] = c.k;
  j["h"] = c.h;
  j["h_sweep"] = c.h_sweep;
  j["mode"] = c.mode;
  j["la_mode"] = c.la_mode;
  j["epsilon"] = c.epsilon;
  j["delta"] = c.delta;
  j["gamma"] = c.gamma ? Json(*c.gamma) : Json();
  j["samples"] = c.samples ? Json(*c.samples) : Json();
  j["initial_samples"] = c.initial_samples;
  j["growth"] = c.growth;
  j["max_samples"] = c.max_samples;
  j["strict_delta"] = c.strict_delta;
  j["seed"] = c.seed;
  j["threads"] = c.threads;
  j["normalize"] = c.normalize;
  j["gram_normalize"] = c.gram_normalize;
  j["max_ksets"] = c.max_ksets;
  j["output"] = c.output;
  j["format"] = c.format;
  return j;
}

/// Command line that reproduces the run.
std::vector<std::string> rerun_args(const RunConfig& c) {
  std::vector<std::string> a{c.command, "--dataset", c.dataset, "--name", c.name, "--kernel", c.kernel, "--k",
                             std::to_string(c.k), "--h", std::to_string(c.h), "--mode", c.mode};
  auto add = [&](const std::string& flag, const std::string& value) {
    a.push_back(flag);
    a.push_back(value);
  };
  if (!c.h_sweep.empty()) add("--h-sweep", c.h_sweep);
  add("--la-mode", c.la_mode);
  add("--epsilon", format_value(c.epsilon));
  add("--delta", format_value(c.delta));
  if (c.gamma) add("--gamma", std::to_string(*c.gamma));
  if (c.samples) add("--samples", std::to_string(*c.samples));
  add("--initial-samples", std::to_string(c.initial_samples));
  add("--growth", format_value(c.growth));
  add("--max-samples", std::to_string(c.max_samples));
  if (c.strict_delta) a.push_back("--strict-delta");
  add("--seed", std::to_string(c.seed));
  add("--threads", std::to_string(c.threads));
  add("--normalize", c.normalize);
  if (c.gram_normalize) a.push_back("--gram-normalize");
  add("--max-ksets", std::to_string(c.max_ksets));
  add("--output", c.output);
  add("--format", c.format);
  return a;
}

struct Computed {
  std::vector<FeatureVector> features;
  Json details = Json::object();
};

Neighborhood neighborhood_of(const RunConfig& c) {
  return c.kernel == "kwl-global" ? Neighborhood::kGlobal : Neighborhood::kLocal;
}

std::vector<FeatureVector> linalg_features(const RunConfig& c, const Dataset& data, LabelInterner& interner) {
  std::vector<Csr> operands;
  std::vector<std::vector<LabelKey>> keys;
  operands.reserve(data.size());
  keys.reserve(data.size());
  for (const auto& g : data.graphs) {
    if (is_kset_kernel(c)) {
      auto sets = build_kset_graph(g, c.k, neighborhood_of(c), c.max_ksets);
      keys.push_back(initial_kset_keys(g, sets.index));
      operands.push_back(std::move(sets.adjacency));
    } else {
      keys.push_back(initial_vertex_keys(g));
      operands.push_back(g.adjacency());
    }
  }
  const auto ids = intern_two_phase(keys, interner, c.threads);

  std::vector<const Csr*> blocks;
  for (const auto& op : operands) blocks.push_back(&op);
  std::vector<std::size_t> offsets;
  const Csr joint = block_diagonal(blocks, &offsets);
  Coloring initial{0, {}};
  for (const auto& part : ids) initial.labels.insert(initial.labels.end(), part.begin(), part.end());
  const auto mode = c.la_mode == "aggregate" ? LaMode::kAggregate : LaMode::kPaired;
  const auto colorings = la_refinement(joint, initial, c.h, mode);

  std::vector<FeatureVector> out(data.size());
  for (std::size_t g = 0; g < data.size(); ++g) {
    for (const auto& coloring : colorings) {
      const auto begin = coloring.labels.begin() + static_cast<std::ptrdiff_t>(offsets[g]);
      const auto end = coloring.labels.begin() + static_cast<std::ptrdiff_t>(offsets[g + 1]);
      out[g].blocks.push_back(histogram(Coloring{coloring.iteration, {begin, end}}));
    }
  }
  return out;
}

Computed compute_features(const RunConfig& c, const Dataset& data, std::ostream& err) {
  Computed out;
  LabelInterner interner;
  if (c.mode == "exact") {
    out.features = is_kset_kernel(c) ? kset_dataset_features(data.graphs, c.k, c.h, neighborhood_of(c), interner,
                                                             c.threads, c.max_ksets)
                                     : wl1_dataset_features(data.graphs, c.h, interner, c.threads);
  } else if (c.mode == "linalg") {
    out.features = linalg_features(c, data, interner);
  } else {
    const SamplerOptions options{c.threads, true};
    std::uint64_t fixed = 0;
    if (c.mode == "sampled") {
      if (c.samples) {
        fixed = *c.samples;
      } else {
        fixed = sample_size_dataset({c.epsilon, c.delta, *c.gamma, data.size()});
      }
      out.details["samples_per_graph"] = fixed;
    }
    AdaptiveParams params{c.epsilon, c.delta, c.initial_samples, c.growth, c.max_samples, c.strict_delta};
    Json graphs = Json::array();
    std::size_t too_small = 0;
    for (std::size_t g = 0; g < data.size(); ++g) {
      const auto seed = graph_seed(c.seed, g);
      const auto est = c.mode == "sampled" ? sample_fixed(data.graphs[g], c.k, c.h, fixed, seed, interner, options)
                                           : sample_adaptive(data.graphs[g], c.k, c.h, params, seed, interner, options);
      Json entry{{"graph", g}, {"seed", est.seed}, {"samples", est.sample_count}, {"too_small", est.too_small}};
      if (c.mode == "adaptive") {
        Json rounds = Json::array();
        for (const auto& r : est.rounds) {
          rounds.push_back({{"round", r.round}, {"batch", r.batch}, {"total", r.total}, {"delta", r.delta},
                            {"bound", r.bound}});
        }
        entry["rounds"] = std::move(rounds);
      }
      graphs.push_back(std::move(entry));
      out.features.push_back(est.estimate);
      if (est.too_small) ++too_small;
    }
    if (too_small > 0) {
      err << "wlk: warning: " << too_small << " graph(s) have fewer than " << c.k
          << " vertices; their estimates are zero\n";
    }
    out.details["graphs"] = std::move(graphs);
  }
  out.details["labels"] = interner.size();

  if (c.normalize != "none") {
    const auto scope = c.normalize == "l1-block" ? NormScope::kPerBlock : NormScope::kWholeVector;
    for (auto& fv : out.features) fv = l1_normalize(fv, scope);
  }
  return out;
}

FeatureVector prefix(const FeatureVector& fv, int h) {
  FeatureVector out;
  out.blocks.assign(fv.blocks.begin(), fv.blocks.begin() + std::min<std::ptrdiff_t>(h + 1, fv.h() + 1));
  return out;
}

fs::path sweep_path(const fs::path& base, int h) {
  fs::path p = base;
  p.replace_filename(base.stem().string() + ".h" + std::to_string(h) + base.extension().string());
  return p;
}

int cmd_info(const RunConfig& c, std::ostream& out) {
  const auto data = parse_tu_dataset(c.dataset, c.name);
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::set<RawLabel> node_labels;
  std::set<int> classes(data.class_labels.begin(), data.class_labels.end());
  bool has_node_labels = false;
  bool has_edge_labels = false;
  for (const auto& g : data.graphs) {
    nodes += g.num_vertices();
    edges += g.num_edges();
    has_node_labels = has_node_labels || g.has_node_labels();
    has_edge_labels = has_edge_labels || g.has_edge_labels();
    if (g.has_node_labels()) node_labels.insert(g.node_labels().begin(), g.node_labels().end());
  }
  const double n = static_cast<double>(std::max<std::size_t>(data.size(), 1));
  out << "dataset: " << data.name << '\n';
  out << "graphs: " << data.size() << '\n';
  out << "classes: " << classes.size() << '\n';
  out << std::fixed << std::setprecision(1);
  out << "avg nodes: " << static_cast<double>(nodes) / n << '\n';
  out << "avg edges: " << static_cast<double>(edges) / n << '\n';
  out << "node labels: ";
  if (has_node_labels) {
    out << "yes (" << node_labels.size() << " distinct)\n";
  } else {
    out << "no\n";
  }
  out << "edge labels: " << (has_edge_labels ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_sample_size(double epsilon, double delta, std::uint64_t gamma, std::optional<std::uint64_t> dataset_size,
                    std::ostream& out) {
  const SampleSizeParams p{epsilon, delta, gamma, dataset_size};
  out << (dataset_size ? sample_size_dataset(p) : sample_size_single(p)) << '\n';
  return kExitOk;
}

int cmd_compute(const RunConfig& c, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto total_start = Clock::now();
  Json timings;

  auto start = Clock::now();
  const auto data = parse_tu_dataset(c.dataset, c.name);
  timings["load_s"] = seconds_since(start);

  start = Clock::now();
  const auto computed = compute_features(c, data, err);
  timings["features_s"] = seconds_since(start);

  std::vector<int> hs;
  if (c.h_sweep.empty()) {
    hs.push_back(c.h);
  } else {
    const auto [first, last] = parse_sweep(c.h_sweep);
    for (int h = first; h <= last; ++h) hs.push_back(h);
  }

  Json outputs = Json::array();
  double gram_s = 0.0;
  start = Clock::now();
  for (int h : hs) {
    const fs::path path = c.h_sweep.empty() ? fs::path(c.output) : sweep_path(c.output, h);
    std::vector<FeatureVector> features;
    features.reserve(computed.features.size());
    for (const auto& fv : computed.features) features.push_back(prefix(fv, h));

    if (c.command == "features") {
      write_features_sparse(features, data.class_labels, path);
    } else {
      const auto gram_start = Clock::now();
      auto k = gram_matrix(features, c.threads);
      if (c.gram_normalize) k = cosine_normalize_gram(k);
      gram_s += seconds_since(gram_start);
      if (c.format == "csv") {
        write_gram_csv(k, path);
      } else {
        write_gram_libsvm(k, data.class_labels, path);
      }
    }
    outputs.push_back({{"h", h}, {"path", path.string()}});
    out << path.string() << '\n';
  }
  timings["gram_s"] = gram_s;
  timings["write_s"] = seconds_since(start) - gram_s;
  timings["total_s"] = seconds_since(total_start);

  Json manifest;
  manifest["tool"] = "wlk";
  manifest["argv"] = args;
  manifest["rerun"] = rerun_args(c);
  manifest["config"] = config_json(c);
  manifest["seed"] = c.seed;
  manifest["dataset"] = {{"path", c.dataset},
                         {"name", data.name},
                         {"graphs", data.size()},
                         {"classes", std::set<int>(data.class_labels.begin(), data.class_labels.end()).size()}};
  manifest["outputs"] = std::move(outputs);
  manifest["run"] = computed.details;
  manifest["timings"] = std::move(timings);

  const fs::path manifest_path = c.output + ".manifest.json";
  std::ofstream file(manifest_path, std::ios::trunc);
  if (!file) throw IoError("cannot open " + manifest_path.string() + " for writing");
  file << manifest.dump(2) << '\n';
  if (!file.flush()) throw IoError("write to " + manifest_path.string() + " failed");
  return kExitOk;
}

void add_dataset_options(CLI::App& app, RunConfig& c) {
  app.set_help_flag("--help", "Print this help message and exit");
  app.add_option("--dataset", c.dataset, "Directory holding the TU-format files")->required();
  app.add_option("--name", c.name, "Dataset name used as file prefix (default: directory name)");
}

void add_compute_options(CLI::App& app, RunConfig& c) {
  add_dataset_options(app, c);
  app.add_option("--kernel", c.kernel, "wl1 | kwl-global | kwl-local")
      ->check(CLI::IsMember({"wl1", "kwl-global", "kwl-local"}))
      ->capture_default_str();
  app.add_option("--k", c.k, "k-set order for k-set kernels")->capture_default_str();
  app.add_option("--h", c.h, "Number of refinement iterations")->capture_default_str();
  app.add_option("--h-sweep", c.h_sweep, "Emit one output per h in FIRST..LAST (suffix .hN)");
  app.add_option("--mode", c.mode, "exact | linalg | sampled | adaptive")
      ->check(CLI::IsMember({"exact", "linalg", "sampled", "adaptive"}))
      ->capture_default_str();
  app.add_option("--la-mode", c.la_mode, "Linear-algebra grouping: paired | aggregate")
      ->check(CLI::IsMember({"paired", "aggregate"}))
      ->capture_default_str();
  app.add_option("--epsilon", c.epsilon, "Additive error for sampled and adaptive modes")->capture_default_str();
  app.add_option("--delta", c.delta, "Failure probability for sampled and adaptive modes")->capture_default_str();
  app.add_option("--gamma", c.gamma, "Label-count bound; sampled mode derives the per-graph sample count");
  app.add_option("--samples", c.samples, "Fixed number of samples per graph (sampled mode)");
  app.add_option("--initial-samples", c.initial_samples, "First batch size (adaptive mode)")->capture_default_str();
  app.add_option("--growth", c.growth, "Batch growth factor (adaptive mode)")->capture_default_str();
  app.add_option("--max-samples", c.max_samples, "Sample cap per graph (adaptive mode)")->capture_default_str();
  app.add_flag("--strict-delta", c.strict_delta, "Split delta across adaptive rounds");
  app.add_option("--seed", c.seed, "Random seed")->capture_default_str();
  app.add_option("--threads", c.threads, "Worker threads")->capture_default_str();
  app.add_option("--normalize", c.normalize, "none | l1-block | l1-full")
      ->check(CLI::IsMember({"none", "l1-block", "l1-full"}))
      ->capture_default_str();
  app.add_option("--max-ksets", c.max_ksets, "Refuse exact k-set runs on graphs with more k-sets")
      ->capture_default_str();
  app.add_option("--output", c.output, "Output file")->required();
  app.add_option("--format", c.format, "libsvm | csv (gram), sparse-features (features)")
      ->check(CLI::IsMember({"libsvm", "csv", "sparse-features"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weisfeiler-Leman graph kernels: exact, linear-algebra and sampled k-set variants", "wlk"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  RunConfig c;
  auto* info = app.add_subcommand("info", "Print dataset statistics");
  add_dataset_options(*info, c);

  auto* features = app.add_subcommand("features", "Write per-graph feature vectors");
  add_compute_options(*features, c);

  auto* gram = app.add_subcommand("gram", "Write the gram matrix");
  add_compute_options(*gram, c);
  gram->add_flag("--gram-normalize", c.gram_normalize, "Cosine-normalize the gram matrix");

  double epsilon = 0.1;
  double delta = 0.1;
  std::uint64_t gamma = 1;
  std::optional<std::uint64_t> dataset_size;
  auto* sizes = app.add_subcommand("sample-size", "Print the number of samples for a target accuracy");
  sizes->set_help_flag("--help", "Print this help message and exit");
  sizes->add_option("--gamma", gamma, "Upper bound on the number of distinct labels")->required();
  sizes->add_option("--epsilon", epsilon, "Additive error")->capture_default_str();
  sizes->add_option("--delta", delta, "Failure probability")->capture_default_str();
  sizes->add_option("--dataset-size", dataset_size, "Number of graphs; switches to the dataset-level count");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sizes->parsed()) return cmd_sample_size(epsilon, delta, gamma, dataset_size, out);
    c.command = info->parsed() ? "info" : features->parsed() ? "features" : "gram";
    validate(c);
    if (c.command == "info") return cmd_info(c, out);
    return cmd_compute(c, args, out, err);
  } catch (const ParameterError& e) {
    err << "wlk: error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "wlk: resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const FormatError& e) {
    err << "wlk: data error: " << e.what() << '\n';
    return kExitData;
  } catch (const IoError& e) {
    err << "wlk: data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::bad_alloc&) {
    err << "wlk: resource limit: out of memory\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "wlk: error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace wlk::cli
