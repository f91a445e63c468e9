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

// Text formats.
//
//   edges:      `src dst [weight]` per line, whitespace separated. A line with
//               a single token declares a node without edges. `#` starts a
//               comment.
//   partition:  `label cluster` per line (whitespace on input, tab on output).
//   tuples:     one correspondence per line, labels separated by tabs; a
//               missing member is written as `-`.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gwgraph/measure_graph.hpp"
#include "gwgraph/tasks.hpp"

namespace gwgraph {

struct EdgeFile {
  EdgeList edges;
  // Every label in first-appearance order, including edge-less nodes.
  std::vector<std::string> nodes;
};

EdgeFile read_edge_list(std::istream& in);
EdgeFile read_edge_list(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const EdgeList& edges,
                     const std::vector<std::string>& isolated = {});

// Cluster tokens are arbitrary strings; they are mapped to dense indices in
// first-appearance order.
Partition read_partition(std::istream& in);
Partition read_partition(const std::filesystem::path& path);
void write_partition(std::ostream& out, const Partition& partition);

CorrespondenceSet read_tuples(std::istream& in);
CorrespondenceSet read_tuples(const std::filesystem::path& path);
void write_tuples(std::ostream& out, const CorrespondenceSet& set);

// 64-bit FNV-1a of the file contents, as 16 hex digits.
std::string file_digest(const std::filesystem::path& path);

}  // namespace gwgraph
