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

#include "gwgraph/io.hpp"

#include <cerrno>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace gwgraph {

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

std::vector<std::string> tokens_of(const std::string& line) {
  const std::string body = line.substr(0, line.find('#'));
  std::istringstream ss(body);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::string where(std::size_t line_no) { return " (line " + std::to_string(line_no) + ")"; }

double parse_weight(const std::string& tok, std::size_t line_no) {
  char* end = nullptr;
  errno = 0;
  const double w = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size() || errno == ERANGE) {
    throw std::invalid_argument("edge list: bad weight '" + tok + "'" + where(line_no));
  }
  return w;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

EdgeFile read_edge_list(std::istream& in) {
  EdgeFile file;
  std::unordered_set<std::string> seen;
  auto note = [&](const std::string& label) {
    if (seen.insert(label).second) file.nodes.push_back(label);
  };
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (tok.size() > 3) throw std::invalid_argument("edge list: too many fields" + where(line_no));
    note(tok[0]);
    if (tok.size() == 1) continue;
    note(tok[1]);
    Edge e{tok[0], tok[1], std::nullopt};
    if (tok.size() == 3) e.weight = parse_weight(tok[2], line_no);
    file.edges.push_back(std::move(e));
  }
  return file;
}

EdgeFile read_edge_list(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const EdgeList& edges,
                     const std::vector<std::string>& isolated) {
  for (const auto& label : isolated) out << label << '\n';
  for (const auto& e : edges) {
    out << e.src << '\t' << e.dst;
    if (e.weight) out << '\t' << format_double(*e.weight);
    out << '\n';
  }
}

Partition read_partition(std::istream& in) {
  Partition p;
  std::unordered_map<std::string, int> ids;
  std::unordered_set<std::string> labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (tok.size() != 2) throw std::invalid_argument("partition: expected 2 fields" + where(line_no));
    if (!labels.insert(tok[0]).second) {
      throw std::invalid_argument("partition: duplicate node " + tok[0] + where(line_no));
    }
    auto [it, fresh] = ids.emplace(tok[1], static_cast<int>(ids.size()));
    p.labels.push_back(tok[0]);
    p.assignment.push_back(it->second);
  }
  p.num_clusters = static_cast<int>(ids.size());
  return p;
}

Partition read_partition(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_partition(in);
}

void write_partition(std::ostream& out, const Partition& partition) {
  for (std::size_t i = 0; i < partition.labels.size(); ++i) {
    out << partition.labels[i] << '\t' << partition.assignment[i] << '\n';
  }
}

CorrespondenceSet read_tuples(std::istream& in) {
  CorrespondenceSet set;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Tuple t;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      std::string field = line.substr(start, tab == std::string::npos ? std::string::npos : tab - start);
      t.push_back(field == "-" ? std::nullopt : std::optional<std::string>(std::move(field)));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    set.tuples.push_back(std::move(t));
  }
  return set;
}

CorrespondenceSet read_tuples(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_tuples(in);
}

void write_tuples(std::ostream& out, const CorrespondenceSet& set) {
  for (const auto& t : set.tuples) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out << '\t';
      out << (t[i] ? *t[i] : std::string("-"));
    }
    out << '\n';
  }
}

std::string file_digest(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof buf);
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ULL;
    }
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

}  // namespace gwgraph
