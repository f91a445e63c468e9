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

#include "gwgraph/gw_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace gwgraph {

namespace {

// Lower clamp for Sinkhorn denominators.
constexpr double kDenominatorFloor = 1e-16;

void check_dims(const SparseMatrix& cs, const SparseMatrix& ct, const Matrix& t) {
  if (cs.rows() != cs.cols() || ct.rows() != ct.cols()) {
    throw std::invalid_argument("adjacency matrices must be square");
  }
  if (t.rows() != cs.rows() || t.cols() != ct.rows()) {
    throw std::invalid_argument("coupling shape does not match the graphs");
  }
}

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Row i of a * b accumulates one row segment of b per nonzero of a. Narrow b
// (partitioning against a few barycenter nodes) uses a fixed-width loop; wide
// b is processed in column blocks that stay cache resident.
template <int Width>
void accumulate_fixed(const SparseMatrix& a, const RowMatrix& b, RowMatrix& out) {
  const auto* outer = a.outerIndexPtr();
  const auto* inner = a.innerIndexPtr();
  const double* values = a.valuePtr();
  for (Index i = 0; i < a.outerSize(); ++i) {
    double acc[Width] = {};
    for (auto p = outer[i]; p < outer[i + 1]; ++p) {
      const double v = values[p];
      const double* src = b.data() + static_cast<Index>(inner[p]) * Width;
      for (int j = 0; j < Width; ++j) acc[j] += v * src[j];
    }
    for (int j = 0; j < Width; ++j) out(i, j) = acc[j];
  }
}

RowMatrix sparse_times_dense(const SparseMatrix& a, const RowMatrix& b) {
  constexpr Index kBlock = 256;
  RowMatrix out = RowMatrix::Zero(a.rows(), b.cols());
  switch (b.cols()) {
    case 1: accumulate_fixed<1>(a, b, out); return out;
    case 2: accumulate_fixed<2>(a, b, out); return out;
    case 3: accumulate_fixed<3>(a, b, out); return out;
    case 4: accumulate_fixed<4>(a, b, out); return out;
    case 8: accumulate_fixed<8>(a, b, out); return out;
    default: break;
  }
  const Index width = b.cols();
  const auto* outer = a.outerIndexPtr();
  const auto* inner = a.innerIndexPtr();
  const double* values = a.valuePtr();
  for (Index c0 = 0; c0 < width; c0 += kBlock) {
    const Index c1 = std::min(width, c0 + kBlock);
    for (Index i = 0; i < a.outerSize(); ++i) {
      double* dst = out.data() + i * width;
      for (auto p = outer[i]; p < outer[i + 1]; ++p) {
        const double v = values[p];
        const double* src = b.data() + static_cast<Index>(inner[p]) * width;
        for (Index j = c0; j < c1; ++j) dst[j] += v * src[j];
      }
    }
  }
  return out;
}

// Cs T Ct^T, computed as Cs T and then Ct (Cs T)^T.
// A small target (a barycenter with a few nodes) is multiplied densely.
RowMatrix cross_term(const SparseMatrix& cs, const SparseMatrix& ct, const RowMatrix& t) {
  constexpr Index kSmallTarget = 16;
  if (ct.rows() <= kSmallTarget) {
    const Matrix ct_dense = ct;
    return sparse_times_dense(cs, t) * ct_dense.transpose();
  }
  const RowMatrix left_t = sparse_times_dense(cs, t).transpose();
  return sparse_times_dense(ct, left_t).transpose();
}

// x^T a x over the CSR storage of a.
double quadratic_form(const SparseMatrix& a, const Vector& x) {
  const auto* outer = a.outerIndexPtr();
  const auto* inner = a.innerIndexPtr();
  const double* values = a.valuePtr();
  double total = 0.0;
  for (Index i = 0; i < a.outerSize(); ++i) {
    double row = 0.0;
    for (auto p = outer[i]; p < outer[i + 1]; ++p) row += values[p] * x[inner[p]];
    total += x[i] * row;
  }
  return total;
}

// p^T (Cs.*Cs) p + q^T (Ct.*Ct) q - 2 <Cs T Ct^T, T>, with p, q the
// marginals of T.
double objective_from_cross(const SparseMatrix& cs2, const SparseMatrix& ct2,
                            const RowMatrix& t, const RowMatrix& cross) {
  const Vector p = t.rowwise().sum();
  const Vector q = t.colwise().sum().transpose();
  return quadratic_form(cs2, p) + quadratic_form(ct2, q) - 2.0 * cross.cwiseProduct(t).sum();
}

double l1_distance(const Vector& x, const Vector& y) { return (x - y).lpNorm<1>(); }

// exp(x) with results below the smallest normal double set to zero; such
// entries carry no usable mass and subnormal arithmetic is slow.
RowMatrix exp_flushed(const RowMatrix& x) {
  const double log_min_normal = std::log(std::numeric_limits<double>::min());
  return (x.array() < log_min_normal).select(0.0, x.array().exp());
}

// log sum_j exp(x_ij + w_j) for every row i.
Vector row_logsumexp(const RowMatrix& x, const Vector& w) {
  Vector out(x.rows());
  Eigen::Array<double, 1, Eigen::Dynamic> shifted(x.cols());
  for (Index i = 0; i < x.rows(); ++i) {
    shifted = x.row(i).array() + w.transpose().array();
    const double peak = shifted.maxCoeff();
    if (!std::isfinite(peak)) {
      out[i] = peak;
      continue;
    }
    out[i] = peak + std::log((shifted - peak).exp().sum());
  }
  return out;
}

// log sum_i exp(x_ij + w_i) for every column j.
Vector col_logsumexp(const RowMatrix& x, const Vector& w) {
  using RowArray = Eigen::Array<double, 1, Eigen::Dynamic>;
  RowArray peak = RowArray::Constant(x.cols(), -std::numeric_limits<double>::infinity());
  for (Index i = 0; i < x.rows(); ++i) peak = peak.max(x.row(i).array() + w[i]);
  const RowArray safe = peak.isFinite().select(peak, 0.0);
  RowArray total = RowArray::Zero(x.cols());
  for (Index i = 0; i < x.rows(); ++i) total += (x.row(i).array() + (w[i] - safe)).exp();
  return (safe + total.log()).transpose();
}

// True when every row and every column holds a finite entry and none is NaN.
bool has_finite_lines(const RowMatrix& x) {
  if (x.array().isNaN().any()) return false;
  const auto finite = x.array().isFinite();
  return finite.rowwise().any().all() && finite.colwise().any().all();
}

struct Projection {
  Matrix plan;
  int sweeps = 0;
  double residual = 0.0;
};

// Moves an approximate coupling onto the coupling polytope exactly: rows and
// then columns with excess mass are scaled down, and the remaining deficit is
// added as a rank-one term (the rounding step of Altschuler, Weed and
// Rigollet, 2017).
void round_to_polytope(RowMatrix& p, const Vector& mu_s, const Vector& mu_t) {
  const Vector row = p.rowwise().sum();
  for (Index i = 0; i < p.rows(); ++i) {
    if (row[i] > mu_s[i]) p.row(i) *= mu_s[i] / row[i];
  }
  const Vector col = p.colwise().sum().transpose();
  for (Index j = 0; j < p.cols(); ++j) {
    if (col[j] > mu_t[j]) p.col(j) *= mu_t[j] / col[j];
  }
  const Vector row_gap = (mu_s - p.rowwise().sum()).cwiseMax(0.0);
  const Vector col_gap = (mu_t - p.colwise().sum().transpose()).cwiseMax(0.0);
  const double total = row_gap.sum();
  if (total > 0.0) p.noalias() += row_gap * col_gap.transpose() / total;
}

// Sinkhorn projection of exp(log_t) onto the couplings of (mu_s, mu_t).
// Sweeps run on the linear plan; every kRecenter sweeps the scalings are
// folded into log potentials and the plan is rebuilt from log_t, so entries
// that underflowed on the way come back. If the tolerance is still unmet
// after max_sweeps, the plan is rounded onto the polytope.
Projection project_plan(const RowMatrix& log_t, const Vector& mu_s, const Vector& mu_t,
                        double tol, int max_sweeps) {
  constexpr int kRecenter = 100;
  const Vector log_mu_s = mu_s.array().log();
  const Vector log_mu_t = mu_t.array().log();
  Vector f = Vector::Zero(log_t.rows());
  Vector g = Vector::Zero(log_t.cols());
  RowMatrix p = exp_flushed(log_t);
  Projection out;
  out.residual = std::max(l1_distance(p.rowwise().sum(), mu_s),
                          l1_distance(p.colwise().sum().transpose(), mu_t));
  bool converged = out.residual <= tol;
  while (!converged && out.sweeps < max_sweeps) {
    // One sweep in the log domain leaves no row or column without mass.
    g = log_mu_t - col_logsumexp(log_t, f);
    f = log_mu_s - row_logsumexp(log_t, g);
    ++out.sweeps;
    p = exp_flushed((log_t.colwise() + f).rowwise() + g.transpose());
    for (int k = 0; k < kRecenter; ++k) {
      const Vector col = p.colwise().sum().transpose();
      const Vector row = p.rowwise().sum();
      out.residual = std::max(l1_distance(row, mu_s), l1_distance(col, mu_t));
      if (out.residual <= tol) {
        converged = true;
        break;
      }
      if (out.sweeps >= max_sweeps || (col.array() <= 0.0).any()) break;
      const Vector v = mu_t.array() / col.array();
      p *= v.asDiagonal();
      const Vector scaled_row = p.rowwise().sum();
      if ((scaled_row.array() <= 0.0).any()) break;
      const Vector u = mu_s.array() / scaled_row.array();
      p = u.asDiagonal() * p;
      f += u.array().log().matrix();
      g += v.array().log().matrix();
      ++out.sweeps;
    }
  }
  if (!converged) round_to_polytope(p, mu_s, mu_t);
  out.plan = p;
  return out;
}

GwResult run_prox_grad(const MeasureGraph& gs, const MeasureGraph& gt,
                       const SolverConfig& cfg, RowMatrix t) {
  cfg.validate();
  const SparseMatrix& cs = gs.adjacency();
  const SparseMatrix& ct = gt.adjacency();
  const Vector& mu_s = gs.mu();
  const Vector& mu_t = gt.mu();
  check_dims(cs, ct, t);
  const Index ns = gs.size();
  const Index nt = gt.size();

  const SparseMatrix cs2 = cs.cwiseAbs2();
  const SparseMatrix ct2 = ct.cwiseAbs2();
  const Vector fs = cs2 * mu_s;
  const Vector ft = ct2 * mu_t;
  RowMatrix prior;
  if (cfg.tau > 0.0) prior = cfg.tau * node_cost_matrix(mu_s, mu_t);

  GwResult result;
  result.objective_trace.reserve(static_cast<std::size_t>(cfg.outer_iters));
  const Vector log_mu_s = mu_s.array().log();
  const Vector log_mu_t = mu_t.array().log();
  Vector log_a = log_mu_s;
  Vector log_b = Vector::Zero(nt);
  RowMatrix log_t = t.array().log();

  for (int n = 0; n < cfg.outer_iters; ++n) {
    RowMatrix kernel = cross_term(cs, ct, t);
    result.objective_trace.push_back(objective_from_cross(cs2, ct2, t, kernel));

    // kernel <- L(T_n) + tau C_node, overwriting the cross term in place.
    for (Index i = 0; i < ns; ++i) {
      for (Index j = 0; j < nt; ++j) {
        kernel(i, j) = fs[i] + ft[j] - 2.0 * kernel(i, j);
      }
    }
    if (cfg.tau > 0.0) kernel += prior;

    // log G = -(cost - min cost) / gamma + log T_n. The constant shift is
    // absorbed by the scalings.
    const double shift = kernel.minCoeff();
    kernel = (shift - kernel.array()) / cfg.gamma + log_t.array();
    if (!has_finite_lines(kernel)) {
      throw SolverError("gamma too small: kernel underflow at outer iteration " +
                            std::to_string(n),
                        n);
    }

    for (int s = 0; s < cfg.inner_sinkhorn_iters; ++s) {
      log_b = log_mu_t - col_logsumexp(kernel, log_a);
      log_a = log_mu_s - row_logsumexp(kernel, log_b);
    }
    log_t = (kernel.colwise() + log_a).rowwise() + log_b.transpose();
    RowMatrix next = exp_flushed(log_t);

    const double change = (next - t).norm() / t.norm();
    t = std::move(next);
    result.iterations = n + 1;
    if (change < cfg.tol) break;
  }

  Projection projected =
      project_plan(log_t, mu_s, mu_t, cfg.marginal_tol, cfg.projection_max_sweeps);
  result.projection_sweeps = projected.sweeps;
  result.projection_residual = projected.residual;
  Matrix plan = std::move(projected.plan);
  result.discrepancy = std::max(0.0, gw_discrepancy_value(cs, ct, plan));
  result.coupling = make_coupling(std::move(plan), mu_s, mu_t);
  return result;
}

}  // namespace

Coupling make_coupling(Matrix matrix, const Vector& mu_s, const Vector& mu_t) {
  Coupling c;
  c.row_marginal_error = l1_distance(matrix.rowwise().sum(), mu_s);
  c.col_marginal_error = l1_distance(matrix.colwise().sum().transpose(), mu_t);
  c.matrix = std::move(matrix);
  return c;
}

Matrix node_cost_matrix(const Vector& mu_s, const Vector& mu_t) {
  return (mu_s.replicate(1, mu_t.size()) - mu_t.transpose().replicate(mu_s.size(), 1))
      .cwiseAbs();
}

Matrix loss_matrix(const SparseMatrix& cs, const SparseMatrix& ct, const Matrix& t,
                   const Vector& mu_s, const Vector& mu_t) {
  check_dims(cs, ct, t);
  if (mu_s.size() != cs.rows() || mu_t.size() != ct.rows()) {
    throw std::invalid_argument("loss_matrix: measure size does not match adjacency");
  }
  const Vector fs = cs.cwiseAbs2() * mu_s;
  const Vector ft = ct.cwiseAbs2() * mu_t;
  Matrix l = -2.0 * cross_term(cs, ct, t);
  l.colwise() += fs;
  l.rowwise() += ft.transpose();
  return l;
}

double gw_discrepancy_value(const SparseMatrix& cs, const SparseMatrix& ct,
                            const Matrix& t) {
  check_dims(cs, ct, t);
  const RowMatrix plan = t;
  return objective_from_cross(cs.cwiseAbs2(), ct.cwiseAbs2(), plan, cross_term(cs, ct, plan));
}

int sinkhorn_project(Matrix& kernel, const Vector& mu_s, const Vector& mu_t,
                     double tol, int max_sweeps) {
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const Vector col = kernel.colwise().sum().transpose();
    const Vector row = kernel.rowwise().sum();
    if (l1_distance(row, mu_s) <= tol && l1_distance(col, mu_t) <= tol) return sweep;
    kernel *= (mu_t.array() / col.array().max(kDenominatorFloor)).matrix().asDiagonal();
    const Vector scaled_row = kernel.rowwise().sum();
    kernel = (mu_s.array() / scaled_row.array().max(kDenominatorFloor)).matrix().asDiagonal() *
             kernel;
  }
  return max_sweeps;
}

GwResult prox_grad(const MeasureGraph& gs, const MeasureGraph& gt,
                   const SolverConfig& cfg) {
  return run_prox_grad(gs, gt, cfg, gs.mu() * gt.mu().transpose());
}

GwResult prox_grad(const MeasureGraph& gs, const MeasureGraph& gt,
                   const SolverConfig& cfg, const Matrix& init) {
  if (init.rows() != gs.size() || init.cols() != gt.size()) {
    throw std::invalid_argument("prox_grad: initial coupling has the wrong shape");
  }
  if ((init.array() < 0.0).any()) {
    throw std::invalid_argument("prox_grad: initial coupling has negative entries");
  }
  return run_prox_grad(gs, gt, cfg, init);
}

}  // namespace gwgraph
