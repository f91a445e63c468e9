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

#include "gwgraph/tasks.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <stdexcept>
#include <thread>
#include <utility>

#include "gwgraph/barycenter.hpp"
#include "gwgraph/gw_solver.hpp"

namespace gwgraph {

namespace {

// First maximum along row i.
Index row_argmax(const Matrix& t, Index i) {
  Index best = 0;
  for (Index j = 1; j < t.cols(); ++j) {
    if (t(i, j) > t(i, best)) best = j;
  }
  return best;
}

// First maximum down column j.
Index col_argmax(const Matrix& t, Index j) {
  Index best = 0;
  for (Index i = 1; i < t.rows(); ++i) {
    if (t(i, j) > t(best, j)) best = i;
  }
  return best;
}

Partition make_partition(const MeasureGraph& g, std::vector<int> assignment, int k) {
  Partition p;
  p.labels = g.labels();
  p.num_clusters = k;
  std::vector<std::vector<Index>> members(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    members[static_cast<std::size_t>(assignment[i])].push_back(static_cast<Index>(i));
  }
  p.assignment = std::move(assignment);
  p.subgraphs.resize(static_cast<std::size_t>(k));
  for (int c = 0; c < k; ++c) {
    const auto& m = members[static_cast<std::size_t>(c)];
    if (!m.empty()) p.subgraphs[static_cast<std::size_t>(c)] = extract_subgraph_indices(g, m);
  }
  return p;
}

MeasureGraph disconnected_graph(const Vector& mu) {
  std::vector<std::string> labels;
  std::vector<Eigen::Triplet<double>> diag;
  for (Index k = 0; k < mu.size(); ++k) {
    labels.push_back("c" + std::to_string(k));
    diag.emplace_back(k, k, mu[k]);
  }
  SparseMatrix c(mu.size(), mu.size());
  c.setFromTriplets(diag.begin(), diag.end());
  return MeasureGraph(std::move(labels), std::move(c), mu);
}

// Runs fn(0..count-1) on up to `threads` workers. The first exception in index
// order is rethrown after all workers finish.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const auto n = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < n; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::string path_string(const std::vector<int>& path) {
  std::string out = "level " + std::to_string(path.size()) + ", branch ";
  if (path.empty()) return out + "root";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += "/";
    out += std::to_string(path[i]);
  }
  return out;
}

struct Branch {
  std::vector<int> path;
  std::vector<std::optional<MeasureGraph>> members;

  bool any_empty() const {
    return std::any_of(members.begin(), members.end(), [](const auto& m) { return !m; });
  }
  Index largest() const {
    Index n = 0;
    for (const auto& m : members) {
      if (m) n = std::max(n, m->size());
    }
    return n;
  }
};

std::vector<Tuple> match_leaf(const Branch& leaf, const SolverConfig& cfg) {
  const std::size_t arity = leaf.members.size();
  std::vector<std::size_t> present;
  for (std::size_t m = 0; m < arity; ++m) {
    if (leaf.members[m]) present.push_back(m);
  }
  std::vector<Tuple> out;
  if (present.empty()) return out;
  if (present.size() == 1) {
    const std::size_t m = present.front();
    for (const auto& label : leaf.members[m]->labels()) {
      Tuple t(arity);
      t[m] = label;
      out.push_back(std::move(t));
    }
    return out;
  }
  CorrespondenceSet local;
  if (arity == 2) {
    local = match_two(*leaf.members[0], *leaf.members[1], cfg);
  } else {
    std::vector<MeasureGraph> graphs;
    for (std::size_t m : present) graphs.push_back(*leaf.members[m]);
    local = multi_match(graphs, cfg);
  }
  for (auto& lt : local.tuples) {
    Tuple t(arity);
    for (std::size_t p = 0; p < present.size(); ++p) t[present[p]] = std::move(lt[p]);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::string> member_labels(const std::optional<MeasureGraph>& g) {
  return g ? g->labels() : std::vector<std::string>{};
}

}  // namespace

std::vector<std::string> Partition::members(int cluster) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (assignment[i] == cluster) out.push_back(labels[i]);
  }
  return out;
}

int Partition::nonempty_clusters() const {
  std::vector<bool> seen(static_cast<std::size_t>(num_clusters), false);
  for (int c : assignment) seen[static_cast<std::size_t>(c)] = true;
  return static_cast<int>(std::count(seen.begin(), seen.end(), true));
}

CorrespondenceSet match_two(const MeasureGraph& source, const MeasureGraph& target,
                            const SolverConfig& cfg) {
  const GwResult r = prox_grad(source, target, cfg);
  const Matrix& t = r.coupling.matrix;
  CorrespondenceSet out;
  out.tuples.reserve(static_cast<std::size_t>(source.size()));
  for (Index i = 0; i < source.size(); ++i) {
    out.tuples.push_back({source.labels()[i], target.labels()[row_argmax(t, i)]});
  }
  return out;
}

Partition partition_one(const MeasureGraph& g, const SolverConfig& cfg, int k) {
  if (k < 1 || k > g.size()) {
    throw std::invalid_argument("partition_one: need 1 <= K <= |V|, got K = " +
                                std::to_string(k));
  }
  const Vector mu = g.mu();
  const Vector mu_dc = resample_distribution(std::span<const Vector>(&mu, 1),
                                             std::vector<double>{1.0}, k);
  const GwResult r = prox_grad(g, disconnected_graph(mu_dc), cfg);
  std::vector<int> assignment(static_cast<std::size_t>(g.size()));
  for (Index i = 0; i < g.size(); ++i) {
    assignment[static_cast<std::size_t>(i)] = static_cast<int>(row_argmax(r.coupling.matrix, i));
  }
  return make_partition(g, std::move(assignment), k);
}

CorrespondenceSet multi_match(std::span<const MeasureGraph> graphs, const SolverConfig& cfg) {
  if (graphs.size() < 2) throw std::invalid_argument("multi_match: need at least two graphs");
  Index k = graphs.front().size();
  for (const auto& g : graphs) k = std::min(k, g.size());
  const Barycenter bar = learn_barycenter(graphs, cfg, k);
  CorrespondenceSet out;
  out.tuples.reserve(static_cast<std::size_t>(k));
  for (Index c = 0; c < k; ++c) {
    Tuple t;
    for (std::size_t m = 0; m < graphs.size(); ++m) {
      t.emplace_back(graphs[m].labels()[col_argmax(bar.transports[m].matrix, c)]);
    }
    out.tuples.push_back(std::move(t));
  }
  return out;
}

std::vector<Partition> multi_partition(std::span<const MeasureGraph> graphs,
                                       const SolverConfig& cfg, int k) {
  if (graphs.empty()) throw std::invalid_argument("multi_partition: no graphs");
  if (k < 1) throw std::invalid_argument("multi_partition: K must be >= 1");
  const Barycenter bar = learn_barycenter(graphs, cfg, k);
  std::vector<Partition> out;
  out.reserve(graphs.size());
  for (std::size_t m = 0; m < graphs.size(); ++m) {
    const Matrix& t = bar.transports[m].matrix;
    std::vector<int> assignment(static_cast<std::size_t>(graphs[m].size()));
    for (Index i = 0; i < t.rows(); ++i) {
      assignment[static_cast<std::size_t>(i)] = static_cast<int>(row_argmax(t, i));
    }
    out.push_back(make_partition(graphs[m], std::move(assignment), k));
  }
  return out;
}

SgwlResult s_gwl(std::span<const MeasureGraph> graphs, const SolverConfig& cfg) {
  cfg.validate();
  if (graphs.size() < 2) throw std::invalid_argument("s_gwl: need at least two graphs");
  const int k = cfg.partitions;
  if (k < 2 && cfg.recursion_depth > 0) {
    throw std::invalid_argument("s_gwl: recursion needs K >= 2");
  }
  const Index leaf_size = std::max<Index>(2 * k, 16);

  std::vector<Branch> frontier(1);
  for (const auto& g : graphs) frontier.front().members.emplace_back(g);
  std::vector<Branch> leaves;

  for (int level = 1; level <= cfg.recursion_depth && !frontier.empty(); ++level) {
    std::vector<std::vector<Branch>> children(frontier.size());
    std::vector<bool> is_leaf(frontier.size(), false);
    parallel_for(frontier.size(), cfg.threads, [&](std::size_t b) {
      const Branch& branch = frontier[b];
      if (branch.any_empty() || branch.largest() <= leaf_size) {
        is_leaf[b] = true;
        return;
      }
      std::vector<MeasureGraph> members;
      for (const auto& m : branch.members) members.push_back(*m);
      std::vector<Partition> parts;
      try {
        parts = multi_partition(members, cfg, k);
      } catch (const SolverError& e) {
        throw e.with_context(path_string(branch.path));
      }
      for (int c = 0; c < k; ++c) {
        Branch child;
        child.path = branch.path;
        child.path.push_back(c);
        bool any = false;
        for (auto& p : parts) {
          auto& sub = p.subgraphs[static_cast<std::size_t>(c)];
          any = any || sub.has_value();
          child.members.push_back(std::move(sub));
        }
        if (any) children[b].push_back(std::move(child));
      }
    });
    std::vector<Branch> next;
    for (std::size_t b = 0; b < frontier.size(); ++b) {
      if (is_leaf[b]) {
        leaves.push_back(std::move(frontier[b]));
      } else {
        for (auto& c : children[b]) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  for (auto& b : frontier) leaves.push_back(std::move(b));
  std::sort(leaves.begin(), leaves.end(),
            [](const Branch& x, const Branch& y) { return x.path < y.path; });

  std::vector<std::vector<Tuple>> matched(leaves.size());
  parallel_for(leaves.size(), cfg.threads, [&](std::size_t l) {
    try {
      matched[l] = match_leaf(leaves[l], cfg);
    } catch (const SolverError& e) {
      throw e.with_context("leaf at " + path_string(leaves[l].path));
    }
  });

  SgwlResult result;
  for (std::size_t l = 0; l < leaves.size(); ++l) {
    for (auto& t : matched[l]) result.correspondences.tuples.push_back(std::move(t));
    SgwlLeaf leaf;
    leaf.path = leaves[l].path;
    Index lo = -1;
    Index hi = 0;
    for (const auto& m : leaves[l].members) {
      leaf.members.push_back(member_labels(m));
      if (m) {
        lo = lo < 0 ? m->size() : std::min(lo, m->size());
        hi = std::max(hi, m->size());
      }
    }
    leaf.imbalanced = lo > 0 && hi > 2 * lo;
    result.leaves.push_back(std::move(leaf));
  }
  return result;
}

}  // namespace gwgraph
