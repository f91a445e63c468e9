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

#include <string>
#include <vector>

#include "gwgraph/measure_graph.hpp"
#include "oracles.hpp"

namespace testing_support {

// Undirected graph on labels "0".."n-1" from a dense 0/1 matrix.
inline gwgraph::MeasureGraph graph_from_dense(const oracle::Dense& c,
                                              const gwgraph::DistParams& dist = {}) {
  gwgraph::EdgeList edges;
  gwgraph::BuildOptions options;
  options.dist = dist;
  for (std::size_t i = 0; i < c.size(); ++i) options.nodes.push_back(std::to_string(i));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c[i][j] != 0.0) edges.push_back({std::to_string(i), std::to_string(j), std::nullopt});
  return gwgraph::build_graph(edges, options);
}

// Two disjoint cliques; labels "a0".. and "b0"... The second has `other`
// nodes, or `size` when omitted.
inline gwgraph::MeasureGraph two_cliques(int size, int other = 0) {
  gwgraph::EdgeList edges;
  for (const char* side : {"a", "b"}) {
    const int n = side[0] == 'b' && other > 0 ? other : size;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        edges.push_back({side + std::to_string(i), side + std::to_string(j), std::nullopt});
  }
  return gwgraph::build_graph(edges);
}

// Degree measure plus 0.1 (label + 1) per node, for graphs with numeric
// labels. Breaks the ties of the degree measure while following the labels,
// so a reordered copy gets the same measure.
inline gwgraph::MeasureGraph with_distinct_measure(const gwgraph::MeasureGraph& g) {
  const std::vector<int> degrees = g.degrees();
  gwgraph::Vector mu(g.size());
  for (gwgraph::Index i = 0; i < g.size(); ++i) {
    mu[i] = degrees[static_cast<std::size_t>(i)] + 0.1 * (std::stod(g.labels()[i]) + 1.0);
  }
  return gwgraph::MeasureGraph(g.labels(), g.adjacency(), mu / mu.sum());
}

}  // namespace testing_support
