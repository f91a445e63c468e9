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

#include "gwgraph/config.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gwgraph {

namespace {

struct PresetRow {
  const char* name;
  double tau, a, b, gamma;
  int partitions, recursion_depth;
  int outer_iters, barycenter_iters;
};

// Hyperparameters per experiment family.
constexpr PresetRow kPresets[] = {
    {"synthetic-partition", 0.0, 0.0, 1.0, 1e-2, 2, 0, 4000, 30},
    {"email-partition", 0.0, 0.0, 1e-3, 5e-7, 2, 0, 200, 30},
    {"village-partition", 0.0, 5e-1, 1.0, 5e-5, 2, 0, 200, 30},
    {"synthetic-match", 1e1, 0.0, 1.0, 2e-1, 2, 3, 600, 10},
    {"yeast-match", 1e3, 0.0, 1.0, 2.5e-2, 2, 3, 200, 30},
    {"mc3-match", 1e1, 1.0, 1e-1, 1e-3, 2, 3, 200, 30},
    {"yeast-multimatch", 1e3, 0.0, 1.0, 2.5e-2, 8, 1, 200, 30},
    {"yeast-human-match", 1.0, 0.0, 5e-1, 5e-2, 2, 4, 200, 30},
};

}  // namespace

void SolverConfig::validate() const {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw std::invalid_argument("gamma must be > 0");
  if (!(tau >= 0.0)) throw std::invalid_argument("tau must be >= 0");
  if (!(a >= 0.0) || !(b >= 0.0)) throw std::invalid_argument("a and b must be >= 0");
  if (partitions < 1) throw std::invalid_argument("partition count must be >= 1");
  if (recursion_depth < 0) throw std::invalid_argument("recursion depth must be >= 0");
  if (outer_iters < 1 || inner_sinkhorn_iters < 1 || barycenter_iters < 1 ||
      projection_max_sweeps < 0) {
    throw std::invalid_argument("iteration counts must be >= 1");
  }
  if (!(tol > 0.0) || !(marginal_tol > 0.0) || !(barycenter_tol > 0.0)) {
    throw std::invalid_argument("tolerances must be > 0");
  }
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (!graph_weights.empty()) {
    for (double w : graph_weights) {
      if (!(w >= 0.0)) throw std::invalid_argument("graph weights must be >= 0");
    }
    const double total = std::accumulate(graph_weights.begin(), graph_weights.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("graph weights must sum to 1");
  }
}

SolverConfig preset(std::string_view name) {
  for (const auto& row : kPresets) {
    if (name == row.name) {
      SolverConfig cfg;
      cfg.tau = row.tau;
      cfg.a = row.a;
      cfg.b = row.b;
      cfg.gamma = row.gamma;
      cfg.partitions = row.partitions;
      cfg.recursion_depth = row.recursion_depth;
      cfg.outer_iters = row.outer_iters;
      cfg.barycenter_iters = row.barycenter_iters;
      return cfg;
    }
  }
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& row : kPresets) names.emplace_back(row.name);
  return names;
}

}  // namespace gwgraph
