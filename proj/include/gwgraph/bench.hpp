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

// Benchmark instances and the trivial baselines they are scored against.

#include <cstdint>

#include "gwgraph/measure_graph.hpp"
#include "gwgraph/synthetic.hpp"
#include "gwgraph/tasks.hpp"

namespace gwgraph {

/// Gaussian partition with N nodes, clusters of N(200, 10) nodes.
GeneratorSpec partition_benchmark_spec(int n, double p_in, double p_out, std::uint64_t seed);

/// Source graph of the noisy-matching benchmark: Gaussian partition with
/// clusters of N(20, 10) nodes, p_in = 0.5 and p_out = 0.01.
GeneratorSpec matching_benchmark_spec(int n, std::uint64_t seed);

struct MatchingInstance {
  SyntheticGraph source;
  NoisyGraph target;  // noise seed is seed + 1000
};

MatchingInstance matching_instance(int n, double q_percent, std::uint64_t seed);

/// Uniformly random cluster per node.
Partition random_partition(const MeasureGraph& g, int k, std::uint64_t seed);

/// Every node in cluster 0.
Partition single_cluster(const MeasureGraph& g);

/// Each source node gets a distinct uniformly random target node while
/// targets last; the rest get random targets with repetition.
CorrespondenceSet random_matching(const MeasureGraph& source, const MeasureGraph& target,
                                  std::uint64_t seed);

/// Pairs the i-th highest-degree source node with the i-th highest-degree
/// target node (ties by index). Source nodes beyond |Vt| stay unmatched.
CorrespondenceSet degree_greedy_matching(const MeasureGraph& source, const MeasureGraph& target);

}  // namespace gwgraph
