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

#include "gwgraph/barycenter.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace gwgraph {

namespace {

MeasureGraph barycenter_graph(const Matrix& adjacency, const Vector& mu) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(mu.size()));
  for (Index k = 0; k < mu.size(); ++k) labels.push_back("b" + std::to_string(k));
  SparseMatrix sparse = adjacency.sparseView();
  return MeasureGraph(std::move(labels), std::move(sparse), mu);
}

}  // namespace

std::vector<double> resolve_graph_weights(const SolverConfig& cfg, std::size_t count) {
  if (cfg.graph_weights.empty()) {
    return std::vector<double>(count, 1.0 / static_cast<double>(count));
  }
  if (cfg.graph_weights.size() != count) {
    throw std::invalid_argument("expected " + std::to_string(count) + " graph weights, got " +
                                std::to_string(cfg.graph_weights.size()));
  }
  return cfg.graph_weights;
}

Matrix update_barycenter_adjacency(std::span<const Matrix> transports,
                                   std::span<const SparseMatrix> adjacencies,
                                   std::span<const double> weights,
                                   const Vector& mu_bar) {
  if (transports.size() != adjacencies.size() || transports.size() != weights.size() ||
      transports.empty()) {
    throw std::invalid_argument("barycenter update: need one transport, adjacency and weight per graph");
  }
  if (!(mu_bar.array() > 0.0).all()) {
    throw std::invalid_argument("barycenter update: mu_bar must be strictly positive");
  }
  const Index k = mu_bar.size();
  Matrix sum = Matrix::Zero(k, k);
  for (std::size_t m = 0; m < transports.size(); ++m) {
    const Matrix& t = transports[m];
    const SparseMatrix& c = adjacencies[m];
    if (t.cols() != k || t.rows() != c.rows() || c.rows() != c.cols()) {
      throw std::invalid_argument("barycenter update: shape mismatch for graph " +
                                  std::to_string(m));
    }
    const Matrix ct = c * t;
    sum.noalias() += weights[m] * (t.transpose() * ct);
  }
  return sum.cwiseQuotient(mu_bar * mu_bar.transpose());
}

Barycenter learn_barycenter(std::span<const MeasureGraph> graphs,
                            const SolverConfig& cfg, Index bar_size) {
  cfg.validate();
  if (graphs.empty()) throw std::invalid_argument("learn_barycenter: no graphs");
  if (bar_size < 1) throw std::invalid_argument("learn_barycenter: barycenter size must be >= 1");
  const std::vector<double> weights = resolve_graph_weights(cfg, graphs.size());

  std::vector<Vector> mus;
  std::vector<SparseMatrix> adjacencies;
  for (const auto& g : graphs) {
    mus.push_back(g.mu());
    adjacencies.push_back(g.adjacency());
  }
  const Vector mu_bar = resample_distribution(mus, weights, bar_size);
  Matrix c_bar = mu_bar.asDiagonal();

  std::vector<Matrix> plans;
  for (const auto& g : graphs) plans.push_back(g.mu() * mu_bar.transpose());
  std::vector<Coupling> couplings(graphs.size());

  int iterations = 0;
  for (int n = 0; n < cfg.barycenter_iters; ++n) {
    const MeasureGraph bar = barycenter_graph(c_bar, mu_bar);
    for (std::size_t m = 0; m < graphs.size(); ++m) {
      GwResult r;
      try {
        r = prox_grad(graphs[m], bar, cfg, plans[m]);
      } catch (const SolverError& e) {
        throw e.with_context("barycenter graph " + std::to_string(m));
      }
      plans[m] = r.coupling.matrix;
      couplings[m] = std::move(r.coupling);
    }
    Matrix next = update_barycenter_adjacency(plans, adjacencies, weights, mu_bar);
    const double scale = c_bar.norm();
    const double change = scale > 0.0 ? (next - c_bar).norm() / scale : (next - c_bar).norm();
    c_bar = std::move(next);
    iterations = n + 1;
    if (change < cfg.barycenter_tol) break;
  }
  return Barycenter{barycenter_graph(c_bar, mu_bar), std::move(couplings), iterations};
}

}  // namespace gwgraph
