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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gwgraph/config.hpp"
#include "gwgraph/measure_graph.hpp"

namespace gwgraph {

/// Node-to-cluster assignment. Cluster indices lie in [0, num_clusters);
/// subgraphs[k] is the induced sub-graph of cluster k, or empty when no node
/// landed there. Ground-truth partitions carry no subgraphs.
struct Partition {
  std::vector<std::string> labels;
  std::vector<int> assignment;
  int num_clusters = 0;
  std::vector<std::optional<MeasureGraph>> subgraphs;

  std::vector<std::string> members(int cluster) const;
  int nonempty_clusters() const;
};

/// A tuple holds one entry per input graph; an entry is empty when that graph
/// contributed no node (e.g. an empty branch in the recursion).
using Tuple = std::vector<std::optional<std::string>>;

struct CorrespondenceSet {
  std::vector<Tuple> tuples;
};

/// Pairs every source node with its row-argmax target (lowest index on ties).
CorrespondenceSet match_two(const MeasureGraph& source, const MeasureGraph& target,
                            const SolverConfig& cfg);

/// K-way partition by transport to a K-node disconnected graph whose
/// adjacency is diag(mu_dc), mu_dc the resampled sorted measure of `g`.
/// Throws std::invalid_argument unless 1 <= k <= |V|.
Partition partition_one(const MeasureGraph& g, const SolverConfig& cfg, int k);

/// Multi-graph matching through a barycenter with min_m |V_m| nodes: one
/// tuple per barycenter node, holding each graph's column-argmax node.
CorrespondenceSet multi_match(std::span<const MeasureGraph> graphs, const SolverConfig& cfg);

/// Joint K-way partition of every graph through a shared K-node barycenter;
/// cluster k of each output corresponds to barycenter node k.
std::vector<Partition> multi_partition(std::span<const MeasureGraph> graphs,
                                       const SolverConfig& cfg, int k);

struct SgwlLeaf {
  std::vector<int> path;  // branch index at each level, root first
  // Labels of each graph's member in this leaf (empty when absent).
  std::vector<std::vector<std::string>> members;
  // Largest nonempty member has more than twice the nodes of the smallest.
  bool imbalanced = false;
};

struct SgwlResult {
  CorrespondenceSet correspondences;
  std::vector<SgwlLeaf> leaves;  // ordered by path
};

/// Recursive K-partition matching: up to cfg.recursion_depth levels of joint
/// K-way partitioning, then match_two (two graphs) or multi_match (more) on
/// each leaf set. Branches stop splitting once their largest member has at
/// most max(2K, 16) nodes or any member is empty. Branches of one level run on
/// cfg.threads workers; output order is by branch path either way.
SgwlResult s_gwl(std::span<const MeasureGraph> graphs, const SolverConfig& cfg);

}  // namespace gwgraph
