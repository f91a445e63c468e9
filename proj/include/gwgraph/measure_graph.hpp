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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace gwgraph {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
// CSR storage; the solver's dominant products are sparse-times-dense.
using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

struct Edge {
  std::string src;
  std::string dst;
  std::optional<double> weight;
};

using EdgeList = std::vector<Edge>;

enum class DirectedPolicy { kSymmetrize, kKeep };

// Shape of the degree-based node distribution: mu ~ (degree + offset)^exponent.
struct DistParams {
  double offset = 0.0;
  double exponent = 1.0;
};

struct BuildOptions {
  DirectedPolicy directed = DirectedPolicy::kSymmetrize;
  DistParams dist;
  // Labels that must exist even without incident edges. They are indexed
  // before any edge endpoint, in the given order.
  std::vector<std::string> nodes;
};

/// A graph with a probability measure on its nodes.
///
/// Immutable once constructed; the constructor checks that labels, adjacency
/// and measure agree in size, that adjacency entries are nonnegative, and that
/// the measure is strictly positive and sums to one.
class MeasureGraph {
 public:
  MeasureGraph(std::vector<std::string> labels, SparseMatrix adjacency,
               Vector mu);

  const std::vector<std::string>& labels() const { return labels_; }
  const SparseMatrix& adjacency() const { return adjacency_; }
  const Vector& mu() const { return mu_; }
  Index size() const { return static_cast<Index>(labels_.size()); }

  std::optional<Index> index_of(std::string_view label) const;

  // Number of distinct neighbours of each node, ignoring direction and
  // self-loops.
  std::vector<int> degrees() const;

  bool is_symmetric(double tol = 0.0) const;

 private:
  std::vector<std::string> labels_;
  SparseMatrix adjacency_;
  Vector mu_;
  std::unordered_map<std::string, Index> index_;
};

/// Builds a measure graph from an edge list.
///
/// Labels get contiguous indices in first-appearance order. A graph is
/// weighted when any edge carries an explicit weight: duplicate edges then
/// sum their weights, otherwise they collapse to a single binary entry.
/// Throws std::invalid_argument on an empty edge list or a negative weight.
MeasureGraph build_graph(const EdgeList& edges, const BuildOptions& options = {});

/// mu_i = (n_i + offset)^exponent, normalized to sum 1.
/// Throws std::invalid_argument ("degenerate distribution") when a node has
/// degree zero and the offset is zero.
Vector node_distribution(std::span<const int> degrees, const DistParams& params);

/// Weighted average of the descending-sorted input distributions, each
/// linearly interpolated to `target_size` equally spaced positions and the
/// result renormalized to the simplex.
Vector resample_distribution(std::span<const Vector> mus,
                             std::span<const double> weights,
                             Index target_size);

/// Induced sub-graph on the given labels, ordered as in `g`, with the measure
/// restricted and renormalized.
MeasureGraph extract_subgraph(const MeasureGraph& g,
                              std::span<const std::string> labels);

/// Same as above with node indices of `g`.
MeasureGraph extract_subgraph_indices(const MeasureGraph& g,
                                      std::span<const Index> indices);

}  // namespace gwgraph
