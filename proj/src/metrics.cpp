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

#include "gwgraph/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace gwgraph {

namespace {

// Dense relabeling of a cluster assignment to 0..k-1 in order of appearance.
std::vector<int> compress(const std::vector<int>& assignment, int& count) {
  std::unordered_map<int, int> ids;
  std::vector<int> out;
  out.reserve(assignment.size());
  for (int a : assignment) {
    auto [it, fresh] = ids.emplace(a, static_cast<int>(ids.size()));
    out.push_back(it->second);
  }
  count = static_cast<int>(ids.size());
  return out;
}

double entropy(const std::vector<double>& counts, double n) {
  double h = 0.0;
  for (double c : counts) {
    if (c > 0.0) h -= (c / n) * std::log(c / n);
  }
  return h;
}

// Expected mutual information under the hypergeometric model.
double expected_mutual_information(const std::vector<double>& a, const std::vector<double>& b,
                                   double n) {
  const double lg_n = std::lgamma(n + 1.0);
  double emi = 0.0;
  for (double ai : a) {
    for (double bj : b) {
      const double lo = std::max(1.0, ai + bj - n);
      const double hi = std::min(ai, bj);
      const double base = std::lgamma(ai + 1.0) + std::lgamma(bj + 1.0) +
                          std::lgamma(n - ai + 1.0) + std::lgamma(n - bj + 1.0) - lg_n;
      for (double nij = lo; nij <= hi; nij += 1.0) {
        const double log_p = base - std::lgamma(nij + 1.0) - std::lgamma(ai - nij + 1.0) -
                             std::lgamma(bj - nij + 1.0) - std::lgamma(n - ai - bj + nij + 1.0);
        emi += (nij / n) * std::log(n * nij / (ai * bj)) * std::exp(log_p);
      }
    }
  }
  return emi;
}

}  // namespace

double node_correctness(const CorrespondenceSet& found, const CorrespondenceSet& truth) {
  if (found.tuples.empty()) throw std::invalid_argument("node_correctness: empty found set");
  std::set<Tuple> real(truth.tuples.begin(), truth.tuples.end());
  std::size_t hits = 0;
  for (const auto& t : found.tuples) {
    const bool complete = std::all_of(t.begin(), t.end(), [](const auto& e) { return e.has_value(); });
    if (complete && real.count(t)) ++hits;
  }
  return 100.0 * static_cast<double>(hits) / static_cast<double>(found.tuples.size());
}

double adjusted_mutual_information(const Partition& p1, const Partition& p2) {
  const std::size_t n = p1.labels.size();
  if (n == 0 || p2.labels.size() != n || p1.assignment.size() != n || p2.assignment.size() != n) {
    throw std::invalid_argument("adjusted_mutual_information: node sets differ");
  }
  std::unordered_map<std::string, std::size_t> where;
  for (std::size_t i = 0; i < n; ++i) {
    if (!where.emplace(p2.labels[i], i).second) {
      throw std::invalid_argument("adjusted_mutual_information: duplicate label " + p2.labels[i]);
    }
  }
  std::vector<int> second(n);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i) {
    auto it = where.find(p1.labels[i]);
    if (it == where.end() || !seen.insert(p1.labels[i]).second) {
      throw std::invalid_argument("adjusted_mutual_information: node sets differ at " +
                                  p1.labels[i]);
    }
    second[i] = p2.assignment[it->second];
  }

  int r = 0;
  int c = 0;
  const std::vector<int> x = compress(p1.assignment, r);
  const std::vector<int> y = compress(second, c);
  std::vector<double> table(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0.0);
  std::vector<double> a(static_cast<std::size_t>(r), 0.0);
  std::vector<double> b(static_cast<std::size_t>(c), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    table[static_cast<std::size_t>(x[i]) * static_cast<std::size_t>(c) +
          static_cast<std::size_t>(y[i])] += 1.0;
    a[static_cast<std::size_t>(x[i])] += 1.0;
    b[static_cast<std::size_t>(y[i])] += 1.0;
  }
  const double total = static_cast<double>(n);

  double mi = 0.0;
  std::size_t nonzero = 0;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) {
      const double nij = table[static_cast<std::size_t>(i) * static_cast<std::size_t>(c) +
                               static_cast<std::size_t>(j)];
      if (nij == 0.0) continue;
      ++nonzero;
      mi += (nij / total) *
            std::log(total * nij / (a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)]));
    }
  }
  const double emi = expected_mutual_information(a, b, total);
  const double mean_h = 0.5 * (entropy(a, total) + entropy(b, total));
  const double denom = mean_h - emi;
  if (std::abs(denom) <= std::numeric_limits<double>::epsilon()) {
    const bool identical = r == c && nonzero == static_cast<std::size_t>(r);
    return identical ? 1.0 : 0.0;
  }
  return (mi - emi) / denom;
}

MultiCorrectness nc_multi(const CorrespondenceSet& found) {
  if (found.tuples.empty()) throw std::invalid_argument("nc_multi: empty found set");
  const std::size_t m = found.tuples.front().size();
  if (m < 2) throw std::invalid_argument("nc_multi: tuples need at least two entries");
  std::size_t one = 0;
  std::size_t all = 0;
  for (const auto& t : found.tuples) {
    if (t.size() != m) throw std::invalid_argument("nc_multi: mixed tuple arity");
    std::size_t pairs = 0;
    std::size_t correct = 0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        ++pairs;
        if (t[i] && t[j] && *t[i] == *t[j]) ++correct;
      }
    }
    if (correct > 0) ++one;
    if (correct == pairs) ++all;
  }
  const double count = static_cast<double>(found.tuples.size());
  return {100.0 * static_cast<double>(one) / count, 100.0 * static_cast<double>(all) / count};
}

double edge_correctness(const MeasureGraph& source, const MeasureGraph& target,
                        const CorrespondenceSet& mapping) {
  std::vector<std::optional<Index>> image(static_cast<std::size_t>(source.size()));
  std::vector<bool> covered(static_cast<std::size_t>(source.size()), false);
  for (const auto& t : mapping.tuples) {
    if (t.size() != 2) throw std::invalid_argument("edge_correctness: mapping must hold pairs");
    if (!t[0]) continue;
    const auto s = source.index_of(*t[0]);
    if (!s || covered[static_cast<std::size_t>(*s)]) continue;
    covered[static_cast<std::size_t>(*s)] = true;
    if (t[1]) image[static_cast<std::size_t>(*s)] = target.index_of(*t[1]);
  }
  for (Index i = 0; i < source.size(); ++i) {
    if (!covered[static_cast<std::size_t>(i)]) {
      throw std::invalid_argument("edge_correctness: source node not covered: " +
                                  source.labels()[static_cast<std::size_t>(i)]);
    }
  }

  const bool symmetric = source.is_symmetric();
  const SparseMatrix& cs = source.adjacency();
  const SparseMatrix& ct = target.adjacency();
  std::size_t edges = 0;
  std::size_t kept = 0;
  for (Index i = 0; i < cs.outerSize(); ++i) {
    for (SparseMatrix::InnerIterator it(cs, i); it; ++it) {
      const Index j = it.col();
      if (symmetric && j < i) continue;
      ++edges;
      const auto& u = image[static_cast<std::size_t>(i)];
      const auto& v = image[static_cast<std::size_t>(j)];
      if (!u || !v) continue;
      const bool hit = ct.coeff(*u, *v) != 0.0 || (symmetric && ct.coeff(*v, *u) != 0.0);
      if (hit) ++kept;
    }
  }
  if (edges == 0) throw std::invalid_argument("edge_correctness: source graph has no edges");
  return 100.0 * static_cast<double>(kept) / static_cast<double>(edges);
}

nlohmann::json MetricReport::to_json() const {
  nlohmann::json out;
  out["instance"] = instance;
  out["metrics"] = nlohmann::json::object();
  for (const auto& [name, value] : metrics) out["metrics"][name] = value;
  out["wall_time_seconds"] = wall_time_seconds;
  return out;
}

}  // namespace gwgraph
