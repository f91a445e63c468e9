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

#include <span>
#include <vector>

#include "gwgraph/config.hpp"
#include "gwgraph/gw_solver.hpp"
#include "gwgraph/measure_graph.hpp"

namespace gwgraph {

struct Barycenter {
  // Soft adjacency (edge confidences) and the sorted node measure.
  MeasureGraph graph;
  // transports[m] couples graph m (rows) with the barycenter (columns).
  std::vector<Coupling> transports;
  int iterations = 0;
};

/// C = (sum_m w_m T_m^T C_m T_m) ./ (mu_bar mu_bar^T).
/// Throws std::invalid_argument on shape mismatch or a non-positive mu_bar.
Matrix update_barycenter_adjacency(std::span<const Matrix> transports,
                                   std::span<const SparseMatrix> adjacencies,
                                   std::span<const double> weights,
                                   const Vector& mu_bar);

/// Learns a barycenter graph with `bar_size` nodes by alternating per-graph
/// transport solves with the closed-form adjacency update. The barycenter
/// starts as diag(mu_bar), with mu_bar the resampled average of the sorted
/// input measures; transports are warm-started across alternations.
Barycenter learn_barycenter(std::span<const MeasureGraph> graphs,
                            const SolverConfig& cfg, Index bar_size);

// Weights from the config, or uniform 1/M when none are set.
std::vector<double> resolve_graph_weights(const SolverConfig& cfg, std::size_t count);

}  // namespace gwgraph
