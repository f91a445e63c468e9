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

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "gwgraph/measure_graph.hpp"
#include "gwgraph/tasks.hpp"

namespace gwgraph {

/// Percentage of found tuples that also appear in `truth`. Tuples compare as
/// whole ordered tuples; a tuple with a missing entry is never correct.
/// Throws std::invalid_argument when `found` is empty.
double node_correctness(const CorrespondenceSet& found, const CorrespondenceSet& truth);

/// Adjusted mutual information with the arithmetic-mean normalizer:
///   (MI - E[MI]) / (mean(H1, H2) - E[MI]),
/// E[MI] under the hypergeometric (permutation) model. A zero denominator
/// yields 1 for identical partitions and 0 otherwise. The partitions are
/// matched by label and must cover the same node set.
double adjusted_mutual_information(const Partition& p1, const Partition& p2);

struct MultiCorrectness {
  double at_least_one = 0.0;  // NC@1
  double all = 0.0;           // NC@all
};

/// NC@1 / NC@all for M-tuples with identity ground truth on labels: a pair of
/// entries is correct when both are present and equal. Throws on mixed arity,
/// arity < 2, or an empty set.
MultiCorrectness nc_multi(const CorrespondenceSet& found);

/// Percentage of source edges whose mapped endpoints are adjacent in the
/// target. Each undirected edge counts once. A source node with a missing
/// partner preserves none of its edges; a source node absent from `mapping`
/// is rejected.
double edge_correctness(const MeasureGraph& source, const MeasureGraph& target,
                        const CorrespondenceSet& mapping);

struct MetricReport {
  std::map<std::string, double> metrics;  // ami, nc, nc_at_1, nc_at_all, ...
  double wall_time_seconds = 0.0;
  std::string instance;

  nlohmann::json to_json() const;
};

}  // namespace gwgraph
