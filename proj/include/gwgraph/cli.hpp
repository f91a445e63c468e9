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

#include <filesystem>

#include <json.hpp>

#include "gwgraph/config.hpp"

namespace gwgraph::cli {

/// Runs the `gwgraph` command line and returns the process exit code:
/// 0 on success, 1 on an input or solver error, the CLI11 code on a usage
/// error.
int run(int argc, const char* const* argv);

/// Every SolverConfig field, keyed by its member name.
nlohmann::json config_to_json(const SolverConfig& cfg);

/// Overwrites the fields named in `j`. Throws std::invalid_argument on an
/// unknown key or a value of the wrong type.
void apply_config_json(const nlohmann::json& j, SolverConfig& cfg);

/// `path` under $GWGRAPH_OUT_DIR when that is set and `path` is relative.
std::filesystem::path output_path(const std::filesystem::path& path);

}  // namespace gwgraph::cli
