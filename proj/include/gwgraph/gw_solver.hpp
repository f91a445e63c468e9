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

#include <stdexcept>
#include <string>
#include <vector>

#include "gwgraph/config.hpp"
#include "gwgraph/measure_graph.hpp"

namespace gwgraph {

/// Raised when the Gibbs kernel loses a whole row or column.
/// what() carries any context added while the error propagates.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& message, int iteration)
      : std::runtime_error(message), iteration_(iteration) {}

  int iteration() const { return iteration_; }

  // Copy of this error with `context` prepended to the message.
  SolverError with_context(const std::string& context) const {
    return SolverError(context + ": " + what(), iteration_);
  }

 private:
  int iteration_;
};

struct Coupling {
  Matrix matrix;
  double row_marginal_error = 0.0;  // ||T 1 - mu_s||_1
  double col_marginal_error = 0.0;  // ||T^T 1 - mu_t||_1
};

Coupling make_coupling(Matrix matrix, const Vector& mu_s, const Vector& mu_t);

struct GwResult {
  Coupling coupling;
  // Squared discrepancy: the p = 2 objective evaluated at the coupling.
  double discrepancy = 0.0;
  // Objective at the start of each outer iteration.
  std::vector<double> objective_trace;
  int iterations = 0;
  int projection_sweeps = 0;
  // Larger L1 marginal error when the final Sinkhorn projection stopped. Above
  // cfg.marginal_tol it means the plan was rounded onto the polytope.
  double projection_residual = 0.0;
};

/// c_ij = |mu_s(i) - mu_t(j)|.
Matrix node_cost_matrix(const Vector& mu_s, const Vector& mu_t);

/// Linearized squared-loss cost
///   L = (Cs.*Cs) mu_s 1^T + 1 ((Ct.*Ct) mu_t)^T - 2 Cs T Ct^T,
/// so that <L(T), T> is the p = 2 objective for any T with marginals
/// (mu_s, mu_t). Cs T Ct^T is two sparse-dense products.
Matrix loss_matrix(const SparseMatrix& cs, const SparseMatrix& ct, const Matrix& t,
                   const Vector& mu_s, const Vector& mu_t);

/// sum_{i,j,i',j'} (cs_ij - ct_i'j')^2 T_ii' T_jj', evaluated in closed form
/// using the actual marginals of T, so it is exact for any nonnegative T.
double gw_discrepancy_value(const SparseMatrix& cs, const SparseMatrix& ct,
                            const Matrix& t);

/// Regularized proximal-gradient GW solver.
///
/// Starting from `init` (or mu_s mu_t^T), each outer step forms the kernel
///   G = exp(-(tau C_node + L(T_n)) / gamma) .* T_n
/// and rescales it with `inner_sinkhorn_iters` Sinkhorn sweeps to get T_{n+1}.
/// The iterate is kept as log T and the sweeps run on log potentials, so small
/// gamma does not erase entries. The last iterate is then projected onto the
/// coupling polytope so the result meets `marginal_tol`. Throws SolverError
/// if some row or column of log G is not finite (gamma so small that
/// cost / gamma overflows).
GwResult prox_grad(const MeasureGraph& gs, const MeasureGraph& gt,
                   const SolverConfig& cfg);
GwResult prox_grad(const MeasureGraph& gs, const MeasureGraph& gt,
                   const SolverConfig& cfg, const Matrix& init);

/// Sinkhorn-projects `kernel` onto couplings of (mu_s, mu_t) in place.
/// Returns the number of sweeps used.
int sinkhorn_project(Matrix& kernel, const Vector& mu_s, const Vector& mu_t,
                     double tol, int max_sweeps);

}  // namespace gwgraph
