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

#include "gwgraph/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace gwgraph {

namespace {

using Rng = std::mt19937_64;

std::uint64_t pair_key(Index u, Index v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
}

std::vector<int> cluster_sizes(const GeneratorSpec& spec, Rng& rng) {
  std::vector<int> sizes;
  if (spec.clusters) {
    const int k = *spec.clusters;
    for (int c = 0; c < k; ++c) sizes.push_back(spec.n / k + (c < spec.n % k ? 1 : 0));
    return sizes;
  }
  std::normal_distribution<double> size_dist(spec.cluster_mean, spec.cluster_std);
  int total = 0;
  while (total < spec.n) {
    int s = std::max(1, static_cast<int>(std::lround(size_dist(rng))));
    s = std::min(s, spec.n - total);  // the last cluster absorbs the remainder
    sizes.push_back(s);
    total += s;
  }
  return sizes;
}

SyntheticEdges gaussian_partition(const GeneratorSpec& spec, Rng& rng) {
  const std::vector<int> sizes = cluster_sizes(spec, rng);
  SyntheticEdges out;
  Partition truth;
  truth.num_clusters = static_cast<int>(sizes.size());
  for (int c = 0; c < truth.num_clusters; ++c) {
    for (int s = 0; s < sizes[static_cast<std::size_t>(c)]; ++s) truth.assignment.push_back(c);
  }
  for (int i = 0; i < spec.n; ++i) out.nodes.push_back(std::to_string(i));
  truth.labels = out.nodes;

  std::bernoulli_distribution in(spec.p_in);
  std::bernoulli_distribution across(spec.p_out);
  for (int i = 0; i < spec.n; ++i) {
    for (int j = i + 1; j < spec.n; ++j) {
      const bool same = truth.assignment[static_cast<std::size_t>(i)] ==
                        truth.assignment[static_cast<std::size_t>(j)];
      if (same ? in(rng) : across(rng)) {
        out.edges.push_back({out.nodes[static_cast<std::size_t>(i)],
                             out.nodes[static_cast<std::size_t>(j)], std::nullopt});
      }
    }
  }
  out.truth = std::move(truth);
  return out;
}

// Preferential attachment: the first new node links to the `attach` seed
// nodes; later nodes pick distinct targets with probability proportional to
// degree.
SyntheticEdges barabasi_albert(const GeneratorSpec& spec, Rng& rng) {
  SyntheticEdges out;
  for (int i = 0; i < spec.n; ++i) out.nodes.push_back(std::to_string(i));
  const int m = spec.attach;
  std::vector<int> targets(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) targets[static_cast<std::size_t>(i)] = i;
  std::vector<int> repeated;
  for (int source = m; source < spec.n; ++source) {
    for (int t : targets) {
      out.edges.push_back({out.nodes[static_cast<std::size_t>(source)],
                           out.nodes[static_cast<std::size_t>(t)], std::nullopt});
      repeated.push_back(t);
      repeated.push_back(source);
    }
    std::unordered_set<int> chosen;
    std::uniform_int_distribution<std::size_t> pick(0, repeated.size() - 1);
    targets.clear();
    while (static_cast<int>(targets.size()) < m) {
      const int t = repeated[pick(rng)];
      if (chosen.insert(t).second) targets.push_back(t);
    }
  }
  return out;
}

std::string fresh_label(const MeasureGraph& g, std::size_t k) {
  std::string label = "noise" + std::to_string(k);
  while (g.index_of(label)) label += "_";
  return label;
}

}  // namespace

void GeneratorSpec::validate() const {
  if (n < 1) throw std::invalid_argument("generator: N must be >= 1");
  if (kind == GeneratorKind::kGaussianPartition) {
    if (!(0.0 <= p_out && p_out <= p_in && p_in <= 1.0)) {
      throw std::invalid_argument("generator: need 0 <= p_out <= p_in <= 1");
    }
    if (clusters) {
      if (*clusters < 1 || *clusters > n) {
        throw std::invalid_argument("generator: cluster count must lie in [1, N]");
      }
    } else {
      if (!(cluster_mean >= 1.0) || cluster_mean > n) {
        throw std::invalid_argument("generator: cluster mean must lie in [1, N]");
      }
      if (!(cluster_std >= 0.0)) throw std::invalid_argument("generator: cluster std must be >= 0");
    }
  } else {
    if (attach < 1 || attach >= n) {
      throw std::invalid_argument("generator: BA attachment count must lie in [1, N)");
    }
  }
}

SyntheticEdges generate_edges(const GeneratorSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  return spec.kind == GeneratorKind::kGaussianPartition ? gaussian_partition(spec, rng)
                                                       : barabasi_albert(spec, rng);
}

SyntheticGraph generate(const GeneratorSpec& spec, const DistParams& dist) {
  SyntheticEdges data = generate_edges(spec);
  BuildOptions options;
  options.dist = dist;
  options.nodes = data.nodes;
  MeasureGraph graph = build_graph(data.edges, options);
  return SyntheticGraph{std::move(data), std::move(graph)};
}

EdgeList graph_edges(const MeasureGraph& g) {
  const SparseMatrix& c = g.adjacency();
  const bool symmetric = g.is_symmetric();
  bool binary = true;
  for (Index k = 0; k < c.nonZeros(); ++k) binary = binary && c.valuePtr()[k] == 1.0;
  EdgeList edges;
  for (Index i = 0; i < c.outerSize(); ++i) {
    for (SparseMatrix::InnerIterator it(c, i); it; ++it) {
      if (symmetric && it.col() < i) continue;
      edges.push_back({g.labels()[i], g.labels()[it.col()],
                       binary ? std::nullopt : std::optional<double>(it.value())});
    }
  }
  return edges;
}

NoisyGraph add_noise(const MeasureGraph& g, double q_percent, std::uint64_t seed,
                     const DistParams& dist) {
  if (!(q_percent >= 0.0)) throw std::invalid_argument("add_noise: q must be >= 0");
  Rng rng(seed);
  const bool symmetric = g.is_symmetric();
  EdgeList edges = graph_edges(g);
  const bool weighted = !edges.empty() && edges.front().weight.has_value();

  // ceil with a little slack so that e.g. 2000 * 5 / 100 stays exactly 100.
  auto scaled = [&](std::size_t count) {
    return static_cast<std::size_t>(
        std::ceil(static_cast<double>(count) * q_percent / 100.0 - 1e-9));
  };
  const std::size_t new_nodes = scaled(static_cast<std::size_t>(g.size()));
  const std::size_t new_edges = scaled(edges.size());

  std::vector<std::string> labels = g.labels();
  for (std::size_t k = 0; k < new_nodes; ++k) labels.push_back(fresh_label(g, k));
  const auto pool = static_cast<Index>(labels.size());

  std::unordered_set<std::uint64_t> present;
  for (Index i = 0; i < g.adjacency().outerSize(); ++i) {
    for (SparseMatrix::InnerIterator it(g.adjacency(), i); it; ++it) {
      present.insert(pair_key(i, it.col()));
    }
  }
  auto add = [&](Index u, Index v) {
    if (u == v || !present.insert(pair_key(u, v)).second) return false;
    edges.push_back({labels[static_cast<std::size_t>(u)], labels[static_cast<std::size_t>(v)],
                     weighted ? std::optional<double>(1.0) : std::nullopt});
    return true;
  };
  std::uniform_int_distribution<Index> any_node(0, pool - 1);
  const std::size_t attempt_cap = 1000 * (new_edges + 1) + 1000000;
  std::size_t attempts = 0;
  auto guard = [&] {
    if (++attempts > attempt_cap) {
      throw std::invalid_argument("add_noise: graph too dense to place the noisy edges");
    }
  };

  // Every new node first receives one of the injected edges.
  const Index first_new = g.size();
  std::size_t placed = 0;
  if (new_nodes > 0) {
    if (new_edges >= new_nodes) {
      for (Index u = first_new; u < pool; ++u) {
        while (!add(u, any_node(rng))) guard();
        ++placed;
      }
    } else if (2 * new_edges >= new_nodes) {
      std::vector<Index> fresh;
      for (Index u = first_new; u < pool; ++u) fresh.push_back(u);
      std::shuffle(fresh.begin(), fresh.end(), rng);
      for (std::size_t k = 0; k + 1 < fresh.size(); k += 2) {
        add(fresh[k], fresh[k + 1]);
        ++placed;
      }
      if (fresh.size() % 2 == 1) {
        while (!add(fresh.back(), any_node(rng))) guard();
        ++placed;
      }
    } else {
      throw std::invalid_argument("add_noise: too few noisy edges to connect every noisy node");
    }
  }
  while (placed < new_edges) {
    if (add(any_node(rng), any_node(rng))) {
      ++placed;
    } else {
      guard();
    }
  }

  std::shuffle(edges.begin(), edges.end(), rng);
  if (symmetric) {
    std::bernoulli_distribution flip(0.5);
    for (auto& e : edges) {
      if (flip(rng)) std::swap(e.src, e.dst);
    }
  }
  std::vector<std::string> nodes = labels;
  std::shuffle(nodes.begin(), nodes.end(), rng);

  BuildOptions options;
  options.dist = dist;
  options.nodes = nodes;
  options.directed = symmetric ? DirectedPolicy::kSymmetrize : DirectedPolicy::kKeep;
  MeasureGraph noisy = build_graph(edges, options);

  CorrespondenceSet truth;
  for (const auto& label : g.labels()) truth.tuples.push_back({label, label});
  return NoisyGraph{std::move(edges), std::move(nodes), std::move(noisy), std::move(truth)};
}

}  // namespace gwgraph
