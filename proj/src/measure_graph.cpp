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

#include "gwgraph/measure_graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>

namespace gwgraph {

namespace {

constexpr double kSimplexTol = 1e-12;

struct Entry {
  Index row;
  Index col;
  double value;
};

enum class Combine { kSum, kMax };

// Sorts by (row, col) and folds repeated coordinates into one entry.
void merge_duplicates(std::vector<Entry>& entries, Combine combine) {
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    return x.row != y.row ? x.row < y.row : x.col < y.col;
  });
  std::size_t out = 0;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (out > 0 && entries[out - 1].row == entries[k].row &&
        entries[out - 1].col == entries[k].col) {
      double& v = entries[out - 1].value;
      v = combine == Combine::kSum ? v + entries[k].value : std::max(v, entries[k].value);
    } else {
      entries[out++] = entries[k];
    }
  }
  entries.resize(out);
}

std::vector<int> pattern_degrees(const SparseMatrix& c) {
  const Index n = c.rows();
  std::vector<std::vector<Index>> nbrs(n);
  for (Index i = 0; i < n; ++i) {
    for (SparseMatrix::InnerIterator it(c, i); it; ++it) {
      if (it.col() == i || it.value() == 0.0) continue;
      nbrs[i].push_back(it.col());
      nbrs[it.col()].push_back(i);
    }
  }
  std::vector<int> deg(n);
  for (Index i = 0; i < n; ++i) {
    auto& v = nbrs[i];
    std::sort(v.begin(), v.end());
    deg[i] = static_cast<int>(std::unique(v.begin(), v.end()) - v.begin());
  }
  return deg;
}

}  // namespace

MeasureGraph::MeasureGraph(std::vector<std::string> labels,
                           SparseMatrix adjacency, Vector mu)
    : labels_(std::move(labels)),
      adjacency_(std::move(adjacency)),
      mu_(std::move(mu)) {
  const auto n = static_cast<Index>(labels_.size());
  if (n == 0) throw std::invalid_argument("measure graph has no nodes");
  if (adjacency_.rows() != n || adjacency_.cols() != n || mu_.size() != n) {
    throw std::invalid_argument(
        "measure graph: labels, adjacency and mu disagree in size");
  }
  adjacency_.makeCompressed();
  for (Index k = 0; k < adjacency_.nonZeros(); ++k) {
    const double v = adjacency_.valuePtr()[k];
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("measure graph: negative or non-finite edge weight");
    }
  }
  if (!(mu_.array() > 0.0).all()) {
    throw std::invalid_argument("measure graph: mu must be strictly positive");
  }
  if (std::abs(mu_.sum() - 1.0) > kSimplexTol) {
    throw std::invalid_argument("measure graph: mu must sum to 1");
  }
  index_.reserve(labels_.size());
  for (Index i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw std::invalid_argument("measure graph: duplicate label '" + labels_[i] + "'");
    }
  }
}

std::optional<Index> MeasureGraph::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> MeasureGraph::degrees() const { return pattern_degrees(adjacency_); }

bool MeasureGraph::is_symmetric(double tol) const {
  SparseMatrix diff = adjacency_ - SparseMatrix(adjacency_.transpose());
  for (Index k = 0; k < diff.nonZeros(); ++k) {
    if (std::abs(diff.valuePtr()[k]) > tol) return false;
  }
  return true;
}

MeasureGraph build_graph(const EdgeList& edges, const BuildOptions& options) {
  if (edges.empty()) throw std::invalid_argument("build_graph: empty edge list");

  std::vector<std::string> labels;
  std::unordered_map<std::string, Index> index;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = index.emplace(label, static_cast<Index>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };
  for (const auto& node : options.nodes) intern(node);

  const bool weighted = std::any_of(edges.begin(), edges.end(),
                                    [](const Edge& e) { return e.weight.has_value(); });
  std::vector<Entry> entries;
  entries.reserve(edges.size());
  for (const auto& e : edges) {
    const double w = e.weight.value_or(1.0);
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("build_graph: negative weight on edge " + e.src +
                                  " -> " + e.dst);
    }
    const Index i = intern(e.src);
    const Index j = intern(e.dst);
    entries.push_back({i, j, w});
  }
  merge_duplicates(entries, weighted ? Combine::kSum : Combine::kMax);
  if (options.directed == DirectedPolicy::kSymmetrize) {
    // C <- max(C, C^T)
    const std::size_t count = entries.size();
    for (std::size_t k = 0; k < count; ++k) {
      entries.push_back({entries[k].col, entries[k].row, entries[k].value});
    }
    merge_duplicates(entries, Combine::kMax);
  }

  const auto n = static_cast<Index>(labels.size());
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(entries.size());
  for (const auto& e : entries) triplets.emplace_back(e.row, e.col, e.value);
  SparseMatrix adjacency(n, n);
  adjacency.setFromTriplets(triplets.begin(), triplets.end());
  adjacency.prune(0.0);

  const std::vector<int> deg = pattern_degrees(adjacency);
  Vector mu = node_distribution(deg, options.dist);
  return MeasureGraph(std::move(labels), std::move(adjacency), std::move(mu));
}

Vector node_distribution(std::span<const int> degrees, const DistParams& params) {
  if (degrees.empty()) throw std::invalid_argument("node_distribution: no nodes");
  if (params.offset < 0.0 || params.exponent < 0.0) {
    throw std::invalid_argument("node_distribution: offset and exponent must be >= 0");
  }
  Vector mu(static_cast<Index>(degrees.size()));
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < 0) throw std::invalid_argument("node_distribution: negative degree");
    if (degrees[i] == 0 && params.offset == 0.0) {
      throw std::invalid_argument(
          "node_distribution: degenerate distribution (isolated node with zero offset)");
    }
    mu[static_cast<Index>(i)] = std::pow(degrees[i] + params.offset, params.exponent);
  }
  return mu / mu.sum();
}

Vector resample_distribution(std::span<const Vector> mus,
                             std::span<const double> weights,
                             Index target_size) {
  if (target_size < 1) throw std::invalid_argument("resample_distribution: target size must be >= 1");
  if (mus.empty() || mus.size() != weights.size()) {
    throw std::invalid_argument("resample_distribution: need one weight per distribution");
  }
  Vector out = Vector::Zero(target_size);
  for (std::size_t m = 0; m < mus.size(); ++m) {
    const Vector& mu = mus[m];
    if (mu.size() == 0) throw std::invalid_argument("resample_distribution: empty distribution");
    std::vector<double> sorted(mu.data(), mu.data() + mu.size());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const double last = static_cast<double>(sorted.size() - 1);
    for (Index k = 0; k < target_size; ++k) {
      // Equally spaced sample positions over [0, len - 1].
      const double x = target_size == 1 ? 0.0 : last * static_cast<double>(k) /
                                                    static_cast<double>(target_size - 1);
      const auto lo = static_cast<std::size_t>(std::floor(x));
      const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
      const double frac = x - static_cast<double>(lo);
      out[k] += weights[m] * ((1.0 - frac) * sorted[lo] + frac * sorted[hi]);
    }
  }
  const double total = out.sum();
  if (!(total > 0.0)) throw std::invalid_argument("resample_distribution: zero total mass");
  return out / total;
}

MeasureGraph extract_subgraph_indices(const MeasureGraph& g,
                                      std::span<const Index> indices) {
  if (indices.empty()) throw std::invalid_argument("extract_subgraph: empty node subset");
  std::vector<Index> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("extract_subgraph: duplicate node in subset");
  }
  const Index n = g.size();
  const auto k = static_cast<Index>(sorted.size());
  std::vector<Index> local(n, -1);
  for (Index i = 0; i < k; ++i) {
    if (sorted[i] < 0 || sorted[i] >= n) {
      throw std::invalid_argument("extract_subgraph: node index out of range");
    }
    local[sorted[i]] = i;
  }

  std::vector<std::string> labels;
  labels.reserve(sorted.size());
  Vector mu(k);
  std::vector<Eigen::Triplet<double>> triplets;
  const SparseMatrix& c = g.adjacency();
  for (Index i = 0; i < k; ++i) {
    const Index row = sorted[i];
    labels.push_back(g.labels()[row]);
    mu[i] = g.mu()[row];
    for (SparseMatrix::InnerIterator it(c, row); it; ++it) {
      const Index col = local[it.col()];
      if (col >= 0) triplets.emplace_back(i, col, it.value());
    }
  }
  SparseMatrix adjacency(k, k);
  adjacency.setFromTriplets(triplets.begin(), triplets.end());
  mu /= mu.sum();
  return MeasureGraph(std::move(labels), std::move(adjacency), std::move(mu));
}

MeasureGraph extract_subgraph(const MeasureGraph& g,
                              std::span<const std::string> labels) {
  std::vector<Index> indices;
  indices.reserve(labels.size());
  for (const auto& label : labels) {
    auto idx = g.index_of(label);
    if (!idx) throw std::invalid_argument("extract_subgraph: unknown label '" + label + "'");
    indices.push_back(*idx);
  }
  return extract_subgraph_indices(g, indices);
}

}  // namespace gwgraph
