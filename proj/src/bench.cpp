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

#include "gwgraph/bench.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace gwgraph {

namespace {

std::vector<Index> by_degree(const MeasureGraph& g) {
  const std::vector<int> degree = g.degrees();
  std::vector<Index> order(static_cast<std::size_t>(g.size()));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) {
    return degree[static_cast<std::size_t>(x)] > degree[static_cast<std::size_t>(y)];
  });
  return order;
}

}  // namespace

GeneratorSpec partition_benchmark_spec(int n, double p_in, double p_out, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.n = n;
  spec.p_in = p_in;
  spec.p_out = p_out;
  spec.cluster_mean = 200.0;
  spec.cluster_std = 10.0;
  spec.seed = seed;
  return spec;
}

GeneratorSpec matching_benchmark_spec(int n, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.n = n;
  spec.p_in = 0.5;
  spec.p_out = 0.01;
  spec.cluster_mean = 20.0;
  spec.cluster_std = 10.0;
  spec.seed = seed;
  return spec;
}

MatchingInstance matching_instance(int n, double q_percent, std::uint64_t seed) {
  SyntheticGraph source = generate(matching_benchmark_spec(n, seed));
  NoisyGraph target = add_noise(source.graph, q_percent, seed + 1000);
  return MatchingInstance{std::move(source), std::move(target)};
}

Partition random_partition(const MeasureGraph& g, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, k - 1);
  Partition p;
  p.labels = g.labels();
  p.num_clusters = k;
  for (Index i = 0; i < g.size(); ++i) p.assignment.push_back(pick(rng));
  return p;
}

Partition single_cluster(const MeasureGraph& g) {
  Partition p;
  p.labels = g.labels();
  p.num_clusters = 1;
  p.assignment.assign(static_cast<std::size_t>(g.size()), 0);
  return p;
}

CorrespondenceSet random_matching(const MeasureGraph& source, const MeasureGraph& target,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Index> order(static_cast<std::size_t>(target.size()));
  std::iota(order.begin(), order.end(), Index{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<std::size_t> any(0, order.size() - 1);
  CorrespondenceSet out;
  for (Index i = 0; i < source.size(); ++i) {
    const auto slot = static_cast<std::size_t>(i);
    const Index j = slot < order.size() ? order[slot] : order[any(rng)];
    out.tuples.push_back({source.labels()[i], target.labels()[j]});
  }
  return out;
}

CorrespondenceSet degree_greedy_matching(const MeasureGraph& source, const MeasureGraph& target) {
  const std::vector<Index> s = by_degree(source);
  const std::vector<Index> t = by_degree(target);
  CorrespondenceSet out;
  for (std::size_t r = 0; r < s.size(); ++r) {
    Tuple tuple{source.labels()[s[r]], std::nullopt};
    if (r < t.size()) tuple[1] = target.labels()[t[r]];
    out.tuples.push_back(std::move(tuple));
  }
  return out;
}

}  // namespace gwgraph
