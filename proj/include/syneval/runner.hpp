// Copyright 2026 SynEval authors.
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

#ifndef SYNEVAL_RUNNER_HPP_
#define SYNEVAL_RUNNER_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "syneval/privacy.hpp"
#include "syneval/utility.hpp"

namespace syneval {

enum class Axis { Fidelity, Text, Utility, Privacy };

struct FailGate {
  std::string key;  // dotted path into the report JSON, e.g. fidelity.sps
  double threshold = 0.0;
};

struct RunConfig {
  std::optional<std::filesystem::path> real;
  std::optional<std::filesystem::path> synthetic;
  std::optional<std::filesystem::path> members;
  std::optional<std::filesystem::path> non_members;
  std::optional<std::filesystem::path> schema_path;
  std::optional<std::filesystem::path> lexicon;
  std::optional<std::filesystem::path> stopwords;
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> out_md;

  // Empty selects axes automatically from the supplied inputs.
  std::vector<Axis> axes;

  std::string text_column = "text";
  std::string rating_column = "rating";
  double tolerance = 1.0;
  LogRegHyper hyper;
  std::uint32_t min_df = 1;
  std::uint32_t max_features = 5000;
  double holdout = 0.3;

  std::vector<std::string> id_columns;
  ForestParams forest;
  bool drop_text = false;

  std::uint64_t seed = 42;
  bool deterministic = false;
  std::vector<FailGate> fail_below;
};

/// Exit codes: 0 success, 1 runtime error, 2 validation/config error,
/// 3 a --fail-below gate tripped. Markdown goes to out_md or `out_stream`;
/// errors go to `err_stream` with a machine-parsable E_* prefix.
int run(const RunConfig& config, std::ostream& out_stream,
        std::ostream& err_stream);

/// Applies a JSON config file onto `config`. Keys mirror the CLI flags.
void apply_config_json(RunConfig& config, const std::string& json_text);

}  // namespace syneval

#endif  // SYNEVAL_RUNNER_HPP_
