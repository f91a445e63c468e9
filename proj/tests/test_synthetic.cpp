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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "gwgraph/io.hpp"
#include "gwgraph/metrics.hpp"
#include "gwgraph/synthetic.hpp"

using namespace gwgraph;

namespace {

using EdgeSet = std::set<std::pair<std::string, std::string>>;

EdgeSet undirected(const EdgeList& edges) {
  EdgeSet out;
  for (const auto& e : edges) out.insert(std::minmax(e.src, e.dst));
  return out;
}

std::string serialized(const EdgeList& edges, const std::vector<std::string>& nodes = {}) {
  std::ostringstream out;
  write_edge_list(out, edges, nodes);
  return out.str();
}

// Connected-component index per node label.
std::map<std::string, int> components(const std::vector<std::string>& nodes,
                                      const EdgeList& edges) {
  std::map<std::string, std::string> parent;
  for (const auto& v : nodes) parent[v] = v;
  std::function<std::string(const std::string&)> root = [&](const std::string& v) {
    return parent[v] == v ? v : parent[v] = root(parent[v]);
  };
  for (const auto& e : edges) parent[root(e.src)] = root(e.dst);
  std::map<std::string, int> ids;
  std::map<std::string, int> out;
  for (const auto& v : nodes) {
    const auto [it, fresh] = ids.try_emplace(root(v), static_cast<int>(ids.size()));
    out[v] = it->second;
  }
  return out;
}

// Circulant graph: node i links to i+1 .. i+k (mod n), n * k edges.
MeasureGraph circulant(int n, int k) {
  EdgeList edges;
  for (int i = 0; i < n; ++i)
    for (int d = 1; d <= k; ++d) {
      edges.push_back({std::to_string(i), std::to_string((i + d) % n), std::nullopt});
    }
  return build_graph(edges);
}

}  // namespace

TEST_CASE("one full cluster is a clique") {
  GeneratorSpec spec;
  spec.n = 10;
  spec.clusters = 1;
  spec.p_in = 1.0;
  spec.p_out = 0.0;
  const SyntheticGraph sg = generate(spec);
  CHECK(sg.data.edges.size() == 45);
  CHECK(undirected(sg.data.edges).size() == 45);
  for (int d : sg.graph.degrees()) CHECK(d == 9);
  REQUIRE(sg.data.truth);
  CHECK(sg.data.truth->nonempty_clusters() == 1);
}

TEST_CASE("generation is deterministic per seed") {
  for (GeneratorKind kind : {GeneratorKind::kGaussianPartition, GeneratorKind::kBarabasiAlbert}) {
    GeneratorSpec spec;
    spec.kind = kind;
    spec.n = 300;
    spec.cluster_mean = 50;
    spec.seed = 17;
    const SyntheticEdges a = generate_edges(spec);
    const SyntheticEdges b = generate_edges(spec);
    CHECK(serialized(a.edges, a.nodes) == serialized(b.edges, b.nodes));
    spec.seed = 18;
    CHECK(serialized(generate_edges(spec).edges) != serialized(a.edges));
  }
}

TEST_CASE("cluster sizes cover N exactly") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GeneratorSpec spec;
    spec.n = 1000;
    spec.cluster_mean = 70;
    spec.cluster_std = 20;
    spec.seed = seed;
    const SyntheticEdges data = generate_edges(spec);
    REQUIRE(data.truth);
    CHECK(data.truth->assignment.size() == 1000);
    CHECK(data.truth->nonempty_clusters() == data.truth->num_clusters);
  }
  GeneratorSpec fixed;
  fixed.n = 10;
  fixed.clusters = 3;
  const Partition truth = *generate_edges(fixed).truth;
  CHECK(truth.members(0).size() == 4);
  CHECK(truth.members(1).size() == 3);
  CHECK(truth.members(2).size() == 3);
}

TEST_CASE("edge count lies within three deviations of the binomial mean") {
  GeneratorSpec spec;
  spec.n = 4000;
  spec.p_in = 0.2;
  spec.p_out = 0.05;
  spec.seed = 3;
  const SyntheticEdges data = generate_edges(spec);
  double within = 0.0;
  for (int c = 0; c < data.truth->num_clusters; ++c) {
    const double s = static_cast<double>(data.truth->members(c).size());
    within += s * (s - 1.0) / 2.0;
  }
  const double across = 4000.0 * 3999.0 / 2.0 - within;
  const double mean = within * 0.2 + across * 0.05;
  const double sd = std::sqrt(within * 0.2 * 0.8 + across * 0.05 * 0.95);
  CHECK(std::abs(static_cast<double>(data.edges.size()) - mean) <= 3.0 * sd);
}

TEST_CASE("no cross edges keeps components inside the planted clusters") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    for (double p_in : {1.0, 0.5}) {
      GeneratorSpec spec;
      spec.n = 200;
      spec.cluster_mean = 40;
      spec.cluster_std = 5;
      spec.p_in = p_in;
      spec.p_out = 0.0;
      spec.seed = seed;
      const SyntheticEdges data = generate_edges(spec);
      const auto comp = components(data.nodes, data.edges);
      Partition found;
      found.labels = data.nodes;
      for (const auto& v : data.nodes) found.assignment.push_back(comp.at(v));
      found.num_clusters = 1 + *std::max_element(found.assignment.begin(), found.assignment.end());
      // Each component lies in one cluster; full clusters are connected.
      std::map<int, std::set<int>> clusters_of;
      for (std::size_t i = 0; i < data.nodes.size(); ++i) {
        clusters_of[found.assignment[i]].insert(data.truth->assignment[i]);
      }
      for (const auto& [component, clusters] : clusters_of) CHECK(clusters.size() == 1);
      if (p_in == 1.0) {
        CHECK(adjusted_mutual_information(found, *data.truth) == doctest::Approx(1.0));
      }
    }
  }
}

TEST_CASE("preferential attachment adds m edges per new node") {
  for (int m : {1, 2, 5}) {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::kBarabasiAlbert;
    spec.n = 500;
    spec.attach = m;
    spec.seed = 2;
    const SyntheticEdges data = generate_edges(spec);
    CHECK(data.edges.size() == static_cast<std::size_t>(m * (500 - m)));
    CHECK(undirected(data.edges).size() == data.edges.size());
    CHECK_FALSE(data.truth);
    for (const auto& e : data.edges) CHECK(e.src != e.dst);
  }
}

TEST_CASE("generator specs are validated") {
  GeneratorSpec spec;
  spec.n = 0;
  CHECK_THROWS_AS(generate_edges(spec), std::invalid_argument);
  spec.n = 100;
  spec.cluster_mean = 101;
  CHECK_THROWS_AS(generate_edges(spec), std::invalid_argument);
  spec.cluster_mean = 10;
  spec.p_out = 0.3;
  spec.p_in = 0.2;
  CHECK_THROWS_AS(generate_edges(spec), std::invalid_argument);
  spec.p_out = 0.05;
  spec.clusters = 0;
  CHECK_THROWS_AS(generate_edges(spec), std::invalid_argument);
  spec.clusters.reset();
  spec.cluster_std = -1;
  CHECK_THROWS_AS(generate_edges(spec), std::invalid_argument);
  spec.kind = GeneratorKind::kBarabasiAlbert;
  spec.attach = 100;
  CHECK_THROWS_AS(generate_edges(spec), std::invalid_argument);
}

TEST_CASE("zero noise keeps the graph") {
  const MeasureGraph g = circulant(50, 3);
  const NoisyGraph noisy = add_noise(g, 0.0, 1);
  CHECK(noisy.graph.size() == g.size());
  CHECK(undirected(noisy.edges) == undirected(graph_edges(g)));
  REQUIRE(noisy.truth.tuples.size() == 50);
  for (const auto& t : noisy.truth.tuples) CHECK(t[0] == t[1]);
}

TEST_CASE("five percent noise on 2000 nodes and 10000 edges") {
  const MeasureGraph g = circulant(2000, 5);
  REQUIRE(graph_edges(g).size() == 10000);
  const NoisyGraph noisy = add_noise(g, 5.0, 7);
  CHECK(noisy.graph.size() == 2100);
  const EdgeSet before = undirected(graph_edges(g));
  const EdgeSet after = undirected(noisy.edges);
  CHECK(after.size() == 10500);
  CHECK(noisy.edges.size() == 10500);
  CHECK(std::includes(after.begin(), after.end(), before.begin(), before.end()));
  for (const auto& e : noisy.edges) CHECK(e.src != e.dst);

  // Every injected node has an edge; original labels survive.
  for (int d : noisy.graph.degrees()) CHECK(d >= 1);
  for (const auto& label : g.labels()) CHECK(noisy.graph.index_of(label).has_value());
  CHECK(noisy.nodes == noisy.graph.labels());
  std::vector<std::string> prefix(noisy.nodes.begin(), noisy.nodes.begin() + 2000);
  CHECK(prefix != g.labels());
}

TEST_CASE("noise injection is deterministic and monotone across seeds") {
  GeneratorSpec spec;
  spec.n = 300;
  spec.cluster_mean = 60;
  spec.seed = 5;
  const SyntheticGraph sg = generate(spec);
  const EdgeSet base = undirected(graph_edges(sg.graph));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const NoisyGraph a = add_noise(sg.graph, 10.0, seed);
    const NoisyGraph b = add_noise(sg.graph, 10.0, seed);
    CHECK(serialized(a.edges, a.nodes) == serialized(b.edges, b.nodes));
    const EdgeSet noisy = undirected(a.edges);
    CHECK(std::includes(noisy.begin(), noisy.end(), base.begin(), base.end()));
    CHECK(noisy.size() == a.edges.size());
  }
}

TEST_CASE("noise needs enough edges for the new nodes") {
  // Two nodes and one edge at 100%: two new nodes share one new edge.
  EdgeList one{{"u", "v", std::nullopt}};
  const MeasureGraph g = build_graph(one);
  const NoisyGraph noisy = add_noise(g, 100.0, 3);
  CHECK(noisy.graph.size() == 4);
  for (int d : noisy.graph.degrees()) CHECK(d >= 1);
  CHECK_THROWS_AS(add_noise(g, -1.0, 3), std::invalid_argument);
  // Five new nodes but only one new edge cannot reach them all.
  BuildOptions options;
  options.nodes = {"a", "b", "c", "d", "e"};
  options.dist = {1.0, 1.0};
  const MeasureGraph sparse = build_graph({{"a", "b", std::nullopt}}, options);
  CHECK_THROWS_WITH_AS(add_noise(sparse, 100.0, 3, options.dist),
                       doctest::Contains("too few noisy edges"), std::invalid_argument);
}
