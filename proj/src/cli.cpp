// Copyright 2026 The gwgraph Authors
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

#include "gwgraph/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gwgraph/bench.hpp"
#include "gwgraph/gw_solver.hpp"
#include "gwgraph/io.hpp"
#include "gwgraph/metrics.hpp"
#include "gwgraph/synthetic.hpp"
#include "gwgraph/tasks.hpp"

namespace gwgraph::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out = open_output(path);
  body(out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

// Solver options shared by the solving subcommands. Unset flags leave the
// preset or config file value in place.
struct SolverFlags {
  std::string preset_name;
  std::string config_file;
  std::optional<double> gamma, tau, a, b, tol, marginal_tol;
  std::optional<int> outer_iters, inner_iters, barycenter_iters, partitions, depth, threads;
  std::optional<std::uint64_t> seed;
};

void add_solver_flags(CLI::App* cmd, SolverFlags& f, const std::string& fallback,
                      bool recursion = true) {
  cmd->add_option("--preset", f.preset_name, "Hyperparameter preset (default " + fallback + ")")
      ->check(CLI::IsMember(preset_names()));
  cmd->add_option("--config", f.config_file, "JSON file of SolverConfig fields")
      ->check(CLI::ExistingFile);
  cmd->add_option("--gamma", f.gamma, "Proximal weight");
  cmd->add_option("--tau", f.tau, "Node-prior weight");
  cmd->add_option("--a", f.a, "Degree offset of the node measure");
  cmd->add_option("--b", f.b, "Degree exponent of the node measure");
  cmd->add_option("--outer-iters", f.outer_iters, "Proximal iterations");
  cmd->add_option("--inner-iters", f.inner_iters, "Sinkhorn sweeps per iteration");
  cmd->add_option("--barycenter-iters", f.barycenter_iters, "Barycenter alternations");
  cmd->add_option("--tol", f.tol, "Relative-change stopping tolerance");
  cmd->add_option("--marginal-tol", f.marginal_tol, "Marginal tolerance of the result");
  if (recursion) {
    cmd->add_option("--k", f.partitions, "Partitions per split");
    cmd->add_option("--r", f.depth, "Recursion depth");
  }
  cmd->add_option("--seed", f.seed, "Seed recorded in the manifest");
  cmd->add_option("--threads", f.threads, "Worker threads for recursion branches");
}

json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

SolverConfig resolve_config(const SolverFlags& f, const std::string& fallback) {
  SolverConfig cfg = preset(f.preset_name.empty() ? fallback : f.preset_name);
  if (!f.config_file.empty()) apply_config_json(read_json_file(f.config_file), cfg);
  auto set = [](auto& field, const auto& flag) {
    if (flag) field = *flag;
  };
  set(cfg.gamma, f.gamma);
  set(cfg.tau, f.tau);
  set(cfg.a, f.a);
  set(cfg.b, f.b);
  set(cfg.tol, f.tol);
  set(cfg.marginal_tol, f.marginal_tol);
  set(cfg.outer_iters, f.outer_iters);
  set(cfg.inner_sinkhorn_iters, f.inner_iters);
  set(cfg.barycenter_iters, f.barycenter_iters);
  set(cfg.partitions, f.partitions);
  set(cfg.recursion_depth, f.depth);
  set(cfg.threads, f.threads);
  set(cfg.seed, f.seed);
  cfg.validate();
  return cfg;
}

struct Manifest {
  std::string command;
  std::vector<std::string> argv;
  json config = json::object();
  std::vector<fs::path> inputs;
  std::vector<fs::path> outputs;
  std::uint64_t seed = 0;
  MetricReport report;
  json extra = json::object();
};

void write_manifest(const fs::path& path, const Manifest& m) {
  json j;
  j["command"] = m.command;
  j["argv"] = m.argv;
  j["config"] = m.config;
  j["inputs"] = json::array();
  for (const auto& p : m.inputs) j["inputs"].push_back({{"path", p.string()}, {"fnv1a64", file_digest(p)}});
  j["outputs"] = json::array();
  for (const auto& p : m.outputs) j["outputs"].push_back(p.string());
  j["seed"] = m.seed;
  j["wall_time_seconds"] = m.report.wall_time_seconds;
  j["report"] = m.report.to_json();
  for (const auto& [key, value] : m.extra.items()) j[key] = value;
  write_file(path, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
}

fs::path manifest_path(const fs::path& out) {
  fs::path p = out;
  p += ".manifest.json";
  return p;
}

void print_metrics(const MetricReport& report) {
  for (const auto& [name, value] : report.metrics) {
    std::cout << name << '\t' << std::setprecision(10) << value << '\n';
  }
  std::cout << "wall_time_seconds\t" << report.wall_time_seconds << '\n';
}

MeasureGraph load_graph(const fs::path& path, const SolverConfig& cfg, bool directed) {
  EdgeFile file = read_edge_list(path);
  BuildOptions options;
  options.nodes = std::move(file.nodes);
  options.dist = cfg.dist();
  options.directed = directed ? DirectedPolicy::kKeep : DirectedPolicy::kSymmetrize;
  try {
    return build_graph(file.edges, options);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

// ---- generate -------------------------------------------------------------

struct GenerateArgs {
  std::string kind = "gaussian";
  GeneratorSpec spec;
  std::optional<double> noise;
  std::optional<std::uint64_t> noise_seed;
  std::string out;
};

void add_generate(CLI::App& app, GenerateArgs& g) {
  CLI::App* cmd = app.add_subcommand("generate", "Write a synthetic graph and its ground truth");
  cmd->add_option("--kind", g.kind, "gaussian or ba")->check(CLI::IsMember({"gaussian", "ba"}));
  cmd->add_option("--n", g.spec.n, "Node count");
  cmd->add_option("--p-in", g.spec.p_in, "Intra-cluster edge probability");
  cmd->add_option("--p-out", g.spec.p_out, "Inter-cluster edge probability");
  cmd->add_option("--cluster-mean", g.spec.cluster_mean, "Mean cluster size");
  cmd->add_option("--cluster-std", g.spec.cluster_std, "Cluster size deviation");
  cmd->add_option("--clusters", g.spec.clusters, "Fixed cluster count of near-equal size");
  cmd->add_option("--m", g.spec.attach, "Edges per new node (ba)");
  cmd->add_option("--seed", g.spec.seed, "Generator seed");
  cmd->add_option("--noise", g.noise, "Also write a noisy copy with this percentage");
  cmd->add_option("--noise-seed", g.noise_seed, "Noise seed (default seed + 1000)");
  cmd->add_option("--out", g.out, "Output prefix")->required();
}

int cmd_generate(const GenerateArgs& g, const std::vector<std::string>& argv) {
  const auto start = std::chrono::steady_clock::now();
  GeneratorSpec spec = g.spec;
  spec.kind = g.kind == "ba" ? GeneratorKind::kBarabasiAlbert : GeneratorKind::kGaussianPartition;
  const fs::path prefix = output_path(g.out);
  Manifest m;
  m.command = "generate";
  m.argv = argv;
  m.seed = spec.seed;

  SyntheticEdges data = generate_edges(spec);
  const fs::path edges = fs::path(prefix.string() + ".edges");
  write_file(edges, [&](std::ostream& out) { write_edge_list(out, data.edges, data.nodes); });
  m.outputs.push_back(edges);
  if (data.truth) {
    const fs::path truth = fs::path(prefix.string() + ".truth");
    write_file(truth, [&](std::ostream& out) { write_partition(out, *data.truth); });
    m.outputs.push_back(truth);
    m.report.metrics["clusters"] = data.truth->num_clusters;
  }
  m.report.metrics["nodes"] = static_cast<double>(data.nodes.size());
  m.report.metrics["edges"] = static_cast<double>(data.edges.size());

  if (g.noise) {
    BuildOptions options;
    options.nodes = data.nodes;
    const MeasureGraph graph = build_graph(data.edges, options);
    const std::uint64_t noise_seed = g.noise_seed.value_or(spec.seed + 1000);
    const NoisyGraph noisy = add_noise(graph, *g.noise, noise_seed);
    const fs::path noisy_edges = fs::path(prefix.string() + ".noisy.edges");
    const fs::path pairs = fs::path(prefix.string() + ".pairs");
    write_file(noisy_edges, [&](std::ostream& out) { write_edge_list(out, noisy.edges, noisy.nodes); });
    write_file(pairs, [&](std::ostream& out) { write_tuples(out, noisy.truth); });
    m.outputs.push_back(noisy_edges);
    m.outputs.push_back(pairs);
    m.report.metrics["noisy_nodes"] = static_cast<double>(noisy.nodes.size());
    m.report.metrics["noisy_edges"] = static_cast<double>(noisy.edges.size());
    m.extra["noise"] = {{"q_percent", *g.noise}, {"seed", noise_seed}};
  }
  m.config = {{"kind", g.kind},
              {"n", spec.n},
              {"p_in", spec.p_in},
              {"p_out", spec.p_out},
              {"cluster_mean", spec.cluster_mean},
              {"cluster_std", spec.cluster_std},
              {"clusters", spec.clusters ? json(*spec.clusters) : json(nullptr)},
              {"m", spec.attach},
              {"seed", spec.seed}};
  m.report.instance = prefix.filename().string();
  m.report.wall_time_seconds = seconds_since(start);
  write_manifest(manifest_path(prefix), m);
  print_metrics(m.report);
  return 0;
}

// ---- partition ------------------------------------------------------------

struct PartitionArgs {
  std::string edges;
  int k = 2;
  std::string truth;
  std::string out;
  bool directed = false;
  SolverFlags solver;
};

void add_partition(CLI::App& app, PartitionArgs& p) {
  CLI::App* cmd = app.add_subcommand("partition", "K-way partition of one graph");
  cmd->add_option("edges", p.edges, "Edge-list file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--k", p.k, "Number of clusters K")->required();
  cmd->add_option("--truth", p.truth, "Ground-truth partition file")->check(CLI::ExistingFile);
  cmd->add_option("--out", p.out, "Partition output file")->required();
  cmd->add_flag("--directed", p.directed, "Keep edge directions");
  add_solver_flags(cmd, p.solver, "synthetic-partition", false);
}

int cmd_partition(const PartitionArgs& p, const std::vector<std::string>& argv) {
  const SolverConfig cfg = resolve_config(p.solver, "synthetic-partition");
  const MeasureGraph g = load_graph(p.edges, cfg, p.directed);
  const auto start = std::chrono::steady_clock::now();
  const Partition part = partition_one(g, cfg, p.k);
  Manifest m;
  m.report.wall_time_seconds = seconds_since(start);
  m.command = "partition";
  m.argv = argv;
  m.config = config_to_json(cfg);
  m.config["clusters"] = p.k;
  m.seed = cfg.seed;
  m.inputs.push_back(p.edges);
  m.report.instance = fs::path(p.edges).filename().string();
  m.report.metrics["nonempty_clusters"] = part.nonempty_clusters();
  if (!p.truth.empty()) {
    m.inputs.push_back(p.truth);
    m.report.metrics["ami"] = adjusted_mutual_information(part, read_partition(p.truth));
  }
  const fs::path out = output_path(p.out);
  write_file(out, [&](std::ostream& s) { write_partition(s, part); });
  m.outputs.push_back(out);
  write_manifest(manifest_path(out), m);
  print_metrics(m.report);
  return 0;
}

// ---- match ----------------------------------------------------------------

struct MatchArgs {
  std::string source, target;
  std::string mode = "gwl";
  std::string truth;
  std::string out;
  bool directed = false;
  SolverFlags solver;
};

void add_match(CLI::App& app, MatchArgs& a) {
  CLI::App* cmd = app.add_subcommand("match", "Node correspondence between two graphs");
  cmd->add_option("source", a.source, "Source edge-list file")->required()->check(CLI::ExistingFile);
  cmd->add_option("target", a.target, "Target edge-list file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--mode", a.mode, "gwl (direct) or s-gwl (recursive)")
      ->check(CLI::IsMember({"gwl", "s-gwl"}));
  cmd->add_option("--truth", a.truth, "Ground-truth pairs file")->check(CLI::ExistingFile);
  cmd->add_option("--out", a.out, "Correspondence output file")->required();
  cmd->add_flag("--directed", a.directed, "Keep edge directions");
  add_solver_flags(cmd, a.solver, "synthetic-match");
}

int cmd_match(const MatchArgs& a, const std::vector<std::string>& argv) {
  const SolverConfig cfg = resolve_config(a.solver, "synthetic-match");
  const MeasureGraph s = load_graph(a.source, cfg, a.directed);
  const MeasureGraph t = load_graph(a.target, cfg, a.directed);
  const auto start = std::chrono::steady_clock::now();
  Manifest m;
  CorrespondenceSet found;
  if (a.mode == "gwl") {
    found = match_two(s, t, cfg);
  } else {
    const std::vector<MeasureGraph> graphs{s, t};
    const SgwlResult r = s_gwl(graphs, cfg);
    found = r.correspondences;
    int imbalanced = 0;
    for (const auto& leaf : r.leaves) imbalanced += leaf.imbalanced ? 1 : 0;
    m.report.metrics["leaves"] = static_cast<double>(r.leaves.size());
    m.report.metrics["imbalanced_leaves"] = imbalanced;
  }
  m.report.wall_time_seconds = seconds_since(start);
  m.command = "match";
  m.argv = argv;
  m.config = config_to_json(cfg);
  m.config["mode"] = a.mode;
  m.seed = cfg.seed;
  m.inputs = {a.source, a.target};
  m.report.instance = fs::path(a.source).filename().string() + "~" +
                      fs::path(a.target).filename().string();
  m.report.metrics["edge_correctness"] = edge_correctness(s, t, found);
  if (!a.truth.empty()) {
    m.inputs.push_back(a.truth);
    m.report.metrics["nc"] = node_correctness(found, read_tuples(a.truth));
  }
  const fs::path out = output_path(a.out);
  write_file(out, [&](std::ostream& o) { write_tuples(o, found); });
  m.outputs.push_back(out);
  write_manifest(manifest_path(out), m);
  print_metrics(m.report);
  return 0;
}

// ---- multimatch -----------------------------------------------------------

struct MultiArgs {
  std::vector<std::string> edges;
  std::string mode = "gwl";
  std::string out;
  bool directed = false;
  SolverFlags solver;
};

void add_multimatch(CLI::App& app, MultiArgs& a) {
  CLI::App* cmd = app.add_subcommand("multimatch", "Joint correspondence across several graphs");
  cmd->add_option("edges", a.edges, "Edge-list files (at least two)")
      ->required()
      ->expected(2, -1)
      ->check(CLI::ExistingFile);
  cmd->add_option("--mode", a.mode, "gwl (barycenter) or s-gwl (recursive)")
      ->check(CLI::IsMember({"gwl", "s-gwl"}));
  cmd->add_option("--out", a.out, "Tuple output file")->required();
  cmd->add_flag("--directed", a.directed, "Keep edge directions");
  add_solver_flags(cmd, a.solver, "synthetic-match");
}

int cmd_multimatch(const MultiArgs& a, const std::vector<std::string>& argv) {
  const SolverConfig cfg = resolve_config(a.solver, "synthetic-match");
  std::vector<MeasureGraph> graphs;
  for (const auto& path : a.edges) graphs.push_back(load_graph(path, cfg, a.directed));
  const auto start = std::chrono::steady_clock::now();
  const CorrespondenceSet found =
      a.mode == "gwl" ? multi_match(graphs, cfg) : s_gwl(graphs, cfg).correspondences;
  Manifest m;
  m.report.wall_time_seconds = seconds_since(start);
  m.command = "multimatch";
  m.argv = argv;
  m.config = config_to_json(cfg);
  m.config["mode"] = a.mode;
  m.seed = cfg.seed;
  for (const auto& path : a.edges) m.inputs.emplace_back(path);
  m.report.instance = std::to_string(graphs.size()) + " graphs";
  const MultiCorrectness nc = nc_multi(found);
  m.report.metrics["nc_at_1"] = nc.at_least_one;
  m.report.metrics["nc_at_all"] = nc.all;
  const fs::path out = output_path(a.out);
  write_file(out, [&](std::ostream& o) { write_tuples(o, found); });
  m.outputs.push_back(out);
  write_manifest(manifest_path(out), m);
  print_metrics(m.report);
  return 0;
}

// ---- bench ----------------------------------------------------------------

struct BenchArgs {
  std::string suite;
  std::optional<int> seeds;
  std::optional<int> n;
  double q = 5.0;
  std::string out_dir;
  SolverFlags solver;
};

const std::vector<std::string> kSuites = {"partition-synthetic", "match-synthetic", "speedup"};

void add_bench(CLI::App& app, BenchArgs& b) {
  CLI::App* cmd = app.add_subcommand("bench", "Run a benchmark suite over seeds");
  cmd->add_option("suite", b.suite, "partition-synthetic, match-synthetic or speedup")
      ->required()
      ->check(CLI::IsMember(kSuites));
  cmd->add_option("--seeds", b.seeds, "Number of seeds, starting at 1");
  cmd->add_option("--n", b.n, "Node count (default 4000 for partitioning, 2000 for matching)");
  cmd->add_option("--q", b.q, "Noise percentage for matching suites");
  cmd->add_option("--out-dir", b.out_dir, "Directory for the table and manifest (default bench-<suite>)");
  add_solver_flags(cmd, b.solver, "the suite's preset");
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add(const std::vector<std::string>& row) { rows.push_back(row); }
  void write(std::ostream& out) const {
    for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "\t" : "") << columns[c];
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "\t" : "") << row[c];
      out << '\n';
    }
  }
};

std::string fmt(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(4) << v;
  return s.str();
}

double mean(const std::vector<double>& v) {
  double total = 0.0;
  for (double x : v) total += x;
  return v.empty() ? 0.0 : total / static_cast<double>(v.size());
}

Table bench_partition(const BenchArgs& b, const SolverConfig& cfg, MetricReport& report) {
  Table table{{"n", "p_in", "p_out", "seed", "ami", "ami_random", "ami_single", "seconds"}, {}};
  const int n = b.n.value_or(4000);
  const int seeds = b.seeds.value_or(10);
  for (double p_out : {0.05, 0.1, 0.15}) {
    std::vector<double> ami, random, single, time;
    for (int seed = 1; seed <= seeds; ++seed) {
      const SyntheticGraph sg = generate(partition_benchmark_spec(n, 0.2, p_out, seed));
      const int k = sg.data.truth->num_clusters;
      const auto start = std::chrono::steady_clock::now();
      const Partition part = partition_one(sg.graph, cfg, k);
      time.push_back(seconds_since(start));
      ami.push_back(adjusted_mutual_information(part, *sg.data.truth));
      random.push_back(adjusted_mutual_information(random_partition(sg.graph, k, seed), *sg.data.truth));
      single.push_back(adjusted_mutual_information(single_cluster(sg.graph), *sg.data.truth));
      table.add({std::to_string(n), "0.2", fmt(p_out), std::to_string(seed), fmt(ami.back()),
                 fmt(random.back()), fmt(single.back()), fmt(time.back())});
    }
    table.add({std::to_string(n), "0.2", fmt(p_out), "mean", fmt(mean(ami)), fmt(mean(random)),
               fmt(mean(single)), fmt(mean(time))});
    report.metrics["ami_p_out_" + fmt(p_out)] = mean(ami);
  }
  return table;
}

Table bench_match(const BenchArgs& b, const SolverConfig& cfg, bool with_gwl, MetricReport& report) {
  Table table{{"n", "q", "seed", "method", "nc", "seconds"}, {}};
  const int n = b.n.value_or(2000);
  const int seeds = b.seeds.value_or(5);
  std::map<std::string, std::vector<double>> nc, time;
  for (int seed = 1; seed <= seeds; ++seed) {
    const MatchingInstance inst = matching_instance(n, b.q, seed);
    const MeasureGraph& s = inst.source.graph;
    const MeasureGraph& t = inst.target.graph;
    auto record = [&](const std::string& method, const std::function<CorrespondenceSet()>& run) {
      const auto start = std::chrono::steady_clock::now();
      const CorrespondenceSet found = run();
      time[method].push_back(seconds_since(start));
      nc[method].push_back(node_correctness(found, inst.target.truth));
      table.add({std::to_string(n), fmt(b.q), std::to_string(seed), method, fmt(nc[method].back()),
                 fmt(time[method].back())});
    };
    const std::vector<MeasureGraph> pair{s, t};
    record("s-gwl", [&] { return s_gwl(pair, cfg).correspondences; });
    if (with_gwl) record("gwl", [&] { return match_two(s, t, cfg); });
    record("random", [&] { return random_matching(s, t, seed); });
    record("degree-greedy", [&] { return degree_greedy_matching(s, t); });
  }
  for (const auto& [method, values] : nc) {
    table.add({std::to_string(n), fmt(b.q), "mean", method, fmt(mean(values)), fmt(mean(time[method]))});
    report.metrics["nc_" + method] = mean(values);
    report.metrics["seconds_" + method] = mean(time[method]);
  }
  if (with_gwl) {
    report.metrics["speedup"] = mean(time["gwl"]) / mean(time["s-gwl"]);
  }
  return table;
}

int cmd_bench(const BenchArgs& b, const std::vector<std::string>& argv) {
  const bool partition = b.suite == "partition-synthetic";
  SolverConfig cfg = resolve_config(b.solver, partition ? "synthetic-partition" : "synthetic-match");
  if (b.suite == "speedup") cfg.threads = 1;
  const fs::path dir = output_path(b.out_dir.empty() ? "bench-" + b.suite : b.out_dir);
  const auto start = std::chrono::steady_clock::now();
  Manifest m;
  m.report.instance = b.suite;
  const Table table = partition ? bench_partition(b, cfg, m.report)
                                : bench_match(b, cfg, b.suite == "speedup", m.report);
  m.report.wall_time_seconds = seconds_since(start);
  m.command = "bench";
  m.argv = argv;
  m.config = config_to_json(cfg);
  m.config["suite"] = b.suite;
  m.seed = cfg.seed;
  const fs::path tsv = dir / (b.suite + ".tsv");
  write_file(tsv, [&](std::ostream& o) { table.write(o); });
  m.outputs.push_back(tsv);
  write_manifest(dir / "manifest.json", m);
  table.write(std::cout);
  return 0;
}

}  // namespace

json config_to_json(const SolverConfig& cfg) {
  return {{"gamma", cfg.gamma},
          {"tau", cfg.tau},
          {"a", cfg.a},
          {"b", cfg.b},
          {"partitions", cfg.partitions},
          {"recursion_depth", cfg.recursion_depth},
          {"graph_weights", cfg.graph_weights},
          {"outer_iters", cfg.outer_iters},
          {"inner_sinkhorn_iters", cfg.inner_sinkhorn_iters},
          {"tol", cfg.tol},
          {"marginal_tol", cfg.marginal_tol},
          {"projection_max_sweeps", cfg.projection_max_sweeps},
          {"barycenter_iters", cfg.barycenter_iters},
          {"barycenter_tol", cfg.barycenter_tol},
          {"seed", cfg.seed},
          {"threads", cfg.threads}};
}

void apply_config_json(const json& j, SolverConfig& cfg) {
  if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
  const std::map<std::string, std::function<void(const json&)>> setters = {
      {"gamma", [&](const json& v) { cfg.gamma = v.get<double>(); }},
      {"tau", [&](const json& v) { cfg.tau = v.get<double>(); }},
      {"a", [&](const json& v) { cfg.a = v.get<double>(); }},
      {"b", [&](const json& v) { cfg.b = v.get<double>(); }},
      {"partitions", [&](const json& v) { cfg.partitions = v.get<int>(); }},
      {"recursion_depth", [&](const json& v) { cfg.recursion_depth = v.get<int>(); }},
      {"graph_weights", [&](const json& v) { cfg.graph_weights = v.get<std::vector<double>>(); }},
      {"outer_iters", [&](const json& v) { cfg.outer_iters = v.get<int>(); }},
      {"inner_sinkhorn_iters", [&](const json& v) { cfg.inner_sinkhorn_iters = v.get<int>(); }},
      {"tol", [&](const json& v) { cfg.tol = v.get<double>(); }},
      {"marginal_tol", [&](const json& v) { cfg.marginal_tol = v.get<double>(); }},
      {"projection_max_sweeps", [&](const json& v) { cfg.projection_max_sweeps = v.get<int>(); }},
      {"barycenter_iters", [&](const json& v) { cfg.barycenter_iters = v.get<int>(); }},
      {"barycenter_tol", [&](const json& v) { cfg.barycenter_tol = v.get<double>(); }},
      {"seed", [&](const json& v) { cfg.seed = v.get<std::uint64_t>(); }},
      {"threads", [&](const json& v) { cfg.threads = v.get<int>(); }},
  };
  for (const auto& [key, value] : j.items()) {
    const auto it = setters.find(key);
    if (it == setters.end()) throw std::invalid_argument("config: unknown key '" + key + "'");
    try {
      it->second(value);
    } catch (const json::exception& e) {
      throw std::invalid_argument("config: bad value for '" + key + "': " + e.what());
    }
  }
}

fs::path output_path(const fs::path& path) {
  const char* dir = std::getenv("GWGRAPH_OUT_DIR");
  if (dir == nullptr || *dir == '\0' || path.is_absolute()) return path;
  return fs::path(dir) / path;
}

int run(int argc, const char* const* argv) {
  CLI::App app{"Gromov-Wasserstein graph matching and partitioning", "gwgraph"};
  app.require_subcommand(1);
  GenerateArgs generate_args;
  PartitionArgs partition_args;
  MatchArgs match_args;
  MultiArgs multi_args;
  BenchArgs bench_args;
  add_generate(app, generate_args);
  add_partition(app, partition_args);
  add_match(app, match_args);
  add_multimatch(app, multi_args);
  add_bench(app, bench_args);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  const std::vector<std::string> args(argv, argv + argc);
  try {
    if (app.got_subcommand("generate")) return cmd_generate(generate_args, args);
    if (app.got_subcommand("partition")) return cmd_partition(partition_args, args);
    if (app.got_subcommand("match")) return cmd_match(match_args, args);
    if (app.got_subcommand("multimatch")) return cmd_multimatch(multi_args, args);
    return cmd_bench(bench_args, args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace gwgraph::cli
