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
#include <string>
#include <string_view>
#include <vector>

#include "gwgraph/measure_graph.hpp"

namespace gwgraph {

struct SolverConfig {
  // Weight of the KL proximal term; also the temperature of the Gibbs kernel.
  double gamma = 1e-1;
  // Weight of the node-prior cost |mu_s(i) - mu_t(j)|.
  double tau = 0.0;
  // Degree-distribution shape, see node_distribution().
  double a = 0.0;
  double b = 1.0;

  int partitions = 2;       // fan-out of each recursive split
  int recursion_depth = 0;  // number of recursive split levels
  // Barycenter weights, one per graph; empty means uniform.
  std::vector<double> graph_weights;

  int outer_iters = 200;
  int inner_sinkhorn_iters = 1;
  // Stop when ||T_{n+1} - T_n||_F / ||T_n||_F falls below this.
  double tol = 1e-8;
  // The returned coupling is Sinkhorn-projected until both marginal errors
  // (L1) are below marginal_tol or projection_max_sweeps is reached; a plan
  // still outside the tolerance then is rounded onto the coupling polytope.
  double marginal_tol = 1e-9;
  int projection_max_sweeps = 2000;

  int barycenter_iters = 30;
  double barycenter_tol = 1e-6;

  std::uint64_t seed = 0;
  int threads = 1;

  DistParams dist() const { return {a, b}; }

  // Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

/// Built-in hyperparameter sets, keyed by experiment name:
///   synthetic-partition, email-partition, village-partition,
///   synthetic-match, yeast-match, mc3-match, yeast-multimatch,
///   yeast-human-match.
SolverConfig preset(std::string_view name);
std::vector<std::string> preset_names();

}  // namespace gwgraph
