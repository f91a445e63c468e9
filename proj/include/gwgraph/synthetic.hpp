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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gwgraph/measure_graph.hpp"
#include "gwgraph/tasks.hpp"

namespace gwgraph {

enum class GeneratorKind { kGaussianPartition, kBarabasiAlbert };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kGaussianPartition;
  int n = 100;
  // Gaussian partition: cluster sizes ~ round(N(cluster_mean, cluster_std)),
  // unless `clusters` fixes the count (then sizes are as equal as possible).
  double p_in = 0.2;
  double p_out = 0.05;
  double cluster_mean = 200.0;
  double cluster_std = 10.0;
  std::optional<int> clusters;
  // Barabasi-Albert: edges added per new node.
  int attach = 3;
  std::uint64_t seed = 0;

  void validate() const;
};

struct SyntheticEdges {
  EdgeList edges;
  std::vector<std::string> nodes;  // labels "0".."n-1"
  std::optional<Partition> truth;  // planted clusters (gaussian partition only)
};

struct SyntheticGraph {
  SyntheticEdges data;
  MeasureGraph graph;
};

/// Deterministic for a fixed spec (including the seed).
SyntheticEdges generate_edges(const GeneratorSpec& spec);
SyntheticGraph generate(const GeneratorSpec& spec, const DistParams& dist = {});

struct NoisyGraph {
  EdgeList edges;                  // shuffled serialization order
  std::vector<std::string> nodes;  // shuffled; determines index order
  MeasureGraph graph;
  CorrespondenceSet truth;         // identity pairs on the original labels
};

/// Adds ceil(|V| q / 100) new nodes and ceil(|E| q / 100) new edges. New
/// edges have uniform endpoints over old and new nodes, never duplicate an
/// edge or form a self-loop, and every new node receives at least one.
NoisyGraph add_noise(const MeasureGraph& g, double q_percent, std::uint64_t seed,
                     const DistParams& dist = {});

// Undirected edge list (i < j) of a symmetric graph; all nonzeros otherwise.
EdgeList graph_edges(const MeasureGraph& g);

}  // namespace gwgraph
