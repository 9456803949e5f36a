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

#include "syneval/runner.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>

#include "syneval/fidelity.hpp"
#include "syneval/io.hpp"
#include "syneval/report.hpp"
#include "syneval/rng.hpp"
#include "syneval/text_fidelity.hpp"

namespace syneval {

namespace {

bool has_axis(const std::vector<Axis>& axes, Axis axis) {
  return std::find(axes.begin(), axes.end(), axis) != axes.end();
}

void require_path(const std::optional<std::filesystem::path>& path,
                  const char* flag, const char* axis) {
  if (!path.has_value()) {
    fail(ErrorCode::Config, std::string("the ") + axis + " axis needs " + flag);
  }
  if (!std::filesystem::exists(*path)) {
    fail(ErrorCode::Config, std::string(flag) + ": file not found: '" +
                                path->string() + "'");
  }
}

Schema effective_schema(const std::filesystem::path& data_path,
                        const std::optional<Schema>& base,
                        const std::vector<std::string>& id_columns) {
  Schema schema = base.has_value() ? *base : infer_schema(data_path);
  if (id_columns.empty()) return schema;
  std::vector<ColumnSpec> specs = schema.columns();
  for (auto& spec : specs) {
    if (std::find(id_columns.begin(), id_columns.end(), spec.name) !=
        id_columns.end()) {
      spec.kind = ColumnKind::Identifier;
    }
  }
  return Schema(std::move(specs));
}

std::vector<std::string> non_null_texts(const Table& t, const std::string& column) {
  return t.string_values(t.column_index(column));
}

bool has_text_column(const Table& t, const std::string& column) {
  auto idx = t.schema().find(column);
  return idx.has_value() && t.schema().at(*idx).kind == ColumnKind::Text;
}

double gate_value(const nlohmann::json& doc, const std::string& key) {
  const nlohmann::json* node = &doc;
  std::size_t start = 0;
  while (start <= key.size()) {
    const std::size_t dot = key.find('.', start);
    const std::string part =
        key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (!node->is_object() || !node->contains(part)) {
      fail(ErrorCode::Config, "--fail-below: no numeric value at '" + key + "'");
    }
    node = &node->at(part);
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  if (!node->is_number()) {
    fail(ErrorCode::Config, "--fail-below: '" + key + "' is not a number");
  }
  return node->get<double>();
}

}  // namespace

void apply_config_json(RunConfig& config, const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::Config, std::string("config file: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::Config, "config file must be a JSON object");

  auto path_of = [&](const char* key, std::optional<std::filesystem::path>& out) {
    if (doc.contains(key) && !doc.at(key).is_null()) {
      out = std::filesystem::path(doc.at(key).get<std::string>());
    }
  };
  path_of("real", config.real);
  path_of("synthetic", config.synthetic);
  path_of("members", config.members);
  path_of("non_members", config.non_members);
  path_of("schema", config.schema_path);
  path_of("lexicon", config.lexicon);
  path_of("stopwords", config.stopwords);
  path_of("out", config.out);
  path_of("out_md", config.out_md);

  if (doc.contains("axes")) {
    config.axes.clear();
    for (const auto& name : doc.at("axes")) {
      const std::string axis = name.get<std::string>();
      if (axis == "fidelity") config.axes.push_back(Axis::Fidelity);
      else if (axis == "text") config.axes.push_back(Axis::Text);
      else if (axis == "utility") config.axes.push_back(Axis::Utility);
      else if (axis == "privacy") config.axes.push_back(Axis::Privacy);
      else fail(ErrorCode::Config, "config: unknown axis '" + axis + "'");
    }
  }
  if (doc.contains("text_col")) config.text_column = doc.at("text_col");
  if (doc.contains("rating_col")) config.rating_column = doc.at("rating_col");
  if (doc.contains("tolerance")) config.tolerance = doc.at("tolerance");
  if (doc.contains("lr")) config.hyper.learning_rate = doc.at("lr");
  if (doc.contains("epochs")) config.hyper.epochs = doc.at("epochs");
  if (doc.contains("l2")) config.hyper.l2 = doc.at("l2");
  if (doc.contains("min_df")) config.min_df = doc.at("min_df");
  if (doc.contains("max_features")) config.max_features = doc.at("max_features");
  if (doc.contains("holdout")) config.holdout = doc.at("holdout");
  if (doc.contains("id_cols")) {
    config.id_columns = doc.at("id_cols").get<std::vector<std::string>>();
  }
  if (doc.contains("n_trees")) config.forest.n_trees = doc.at("n_trees");
  if (doc.contains("max_depth")) {
    config.forest.max_depth = doc.at("max_depth").is_null()
                                  ? std::nullopt
                                  : std::optional<int>(doc.at("max_depth"));
  }
  if (doc.contains("min_samples_leaf")) {
    config.forest.min_samples_leaf = doc.at("min_samples_leaf");
  }
  if (doc.contains("drop_text")) config.drop_text = doc.at("drop_text");
  if (doc.contains("seed")) config.seed = doc.at("seed");
  if (doc.contains("deterministic")) config.deterministic = doc.at("deterministic");
  if (doc.contains("fail_below")) {
    for (const auto& [key, value] : doc.at("fail_below").items()) {
      config.fail_below.push_back({key, value.get<double>()});
    }
  }
}

namespace {

int run_checked(const RunConfig& config, std::ostream& out_stream) {
  // Axis selection: explicit toggles, or whatever the inputs allow.
  std::vector<Axis> axes = config.axes;
  const bool explicit_axes = !axes.empty();
  if (!explicit_axes) {
    if (config.real.has_value() && config.synthetic.has_value()) {
      axes = {Axis::Fidelity, Axis::Text, Axis::Utility};
    }
    if (config.members.has_value() && config.non_members.has_value() &&
        config.synthetic.has_value()) {
      axes.push_back(Axis::Privacy);
    }
  }
  if (axes.empty()) {
    fail(ErrorCode::Config,
         "nothing to evaluate: supply --real and --synthetic, or --members, "
         "--non-members and --synthetic");
  }
  // Fixed execution order: fidelity, text, utility, privacy.
  std::sort(axes.begin(), axes.end(),
            [](Axis a, Axis b) { return static_cast<int>(a) < static_cast<int>(b); });
  axes.erase(std::unique(axes.begin(), axes.end()), axes.end());

  // All-or-nothing preflight before any computation.
  for (Axis axis : axes) {
    switch (axis) {
      case Axis::Fidelity:
      case Axis::Text:
      case Axis::Utility:
        require_path(config.real, "--real",
                     axis == Axis::Fidelity ? "fidelity"
                     : axis == Axis::Text   ? "text"
                                            : "utility");
        require_path(config.synthetic, "--synthetic",
                     axis == Axis::Fidelity ? "fidelity"
                     : axis == Axis::Text   ? "text"
                                            : "utility");
        break;
      case Axis::Privacy:
        require_path(config.members, "--members", "privacy");
        require_path(config.non_members, "--non-members", "privacy");
        require_path(config.synthetic, "--synthetic", "privacy");
        break;
    }
  }
  for (const auto& [path, flag] :
       {std::pair{config.schema_path, "--schema"},
        std::pair{config.lexicon, "--lexicon"},
        std::pair{config.stopwords, "--stopwords"}}) {
    if (path.has_value() && !std::filesystem::exists(*path)) {
      fail(ErrorCode::Config, std::string(flag) + ": file not found: '" +
                                  path->string() + "'");
    }
  }
  if (!(config.holdout > 0.0 && config.holdout < 1.0)) {
    fail(ErrorCode::Config, "--holdout must be in (0,1)");
  }

  std::optional<Schema> base_schema;
  if (config.schema_path.has_value()) {
    base_schema = load_schema(*config.schema_path);
  }
  const SentimentLexicon lexicon = config.lexicon.has_value()
                                       ? SentimentLexicon::from_file(*config.lexicon)
                                       : SentimentLexicon::builtin();
  const WordSet stopwords = config.stopwords.has_value()
                                ? stopwords_from_file(*config.stopwords)
                                : builtin_stopwords();

  ReportParts parts;
  parts.seed = config.seed;
  if (config.deterministic) parts.timestamp = "1970-01-01T00:00:00Z";

  std::optional<Table> real, synthetic, members, non_members;
  auto load_input = [&](const std::optional<std::filesystem::path>& path,
                        const char* role) -> std::optional<Table> {
    if (!path.has_value()) return std::nullopt;
    Table t = load_table(
        *path, base_schema.has_value() || !config.id_columns.empty()
                   ? std::optional<Schema>(effective_schema(*path, base_schema,
                                                            config.id_columns))
                   : std::nullopt);
    parts.inputs[role] = fingerprint_table(t);
    return t;
  };
  const bool needs_real_syn =
      has_axis(axes, Axis::Fidelity) || has_axis(axes, Axis::Text) ||
      has_axis(axes, Axis::Utility);
  if (needs_real_syn) {
    real = load_input(config.real, "real");
  }
  if (needs_real_syn || has_axis(axes, Axis::Privacy)) {
    synthetic = load_input(config.synthetic, "synthetic");
  }
  if (has_axis(axes, Axis::Privacy)) {
    members = load_input(config.members, "members");
    non_members = load_input(config.non_members, "non_members");
  }

  // Column-level validation still counts as preflight: explicit axis
  // requests fail fast, auto-selected axes degrade with a warning.
  std::vector<Axis> runnable;
  for (Axis axis : axes) {
    if (axis == Axis::Text || axis == Axis::Utility) {
      const bool ok = has_text_column(*real, config.text_column) &&
                      has_text_column(*synthetic, config.text_column);
      const bool rating_ok =
          axis != Axis::Utility ||
          (real->schema().find(config.rating_column).has_value() &&
           synthetic->schema().find(config.rating_column).has_value());
      if (!ok || !rating_ok) {
        const std::string what =
            axis == Axis::Text
                ? "text axis needs text column '" + config.text_column + "'"
                : "utility axis needs columns '" + config.text_column +
                      "' and '" + config.rating_column + "'";
        if (explicit_axes) fail(ErrorCode::Config, what);
        parts.warnings.push_back(what + "; axis skipped");
        continue;
      }
    }
    runnable.push_back(axis);
  }
  if (runnable.empty()) {
    fail(ErrorCode::Config, "no axis is runnable with the supplied inputs");
  }

  for (Axis axis : runnable) {
    switch (axis) {
      case Axis::Fidelity:
        parts.fidelity = evaluate_fidelity(*real, *synthetic);
        break;
      case Axis::Text: {
        parts.text_fidelity = text_fidelity(
            non_null_texts(*real, config.text_column),
            non_null_texts(*synthetic, config.text_column), lexicon, stopwords);
        break;
      }
      case Axis::Utility: {
        auto [test_real, train_real] =
            split_rows(*real, config.holdout, mix_seed(config.seed, "holdout"));
        UtilityOptions options;
        options.text_column = config.text_column;
        options.rating_column = config.rating_column;
        options.tolerance = config.tolerance;
        options.hyper = config.hyper;
        options.min_df = config.min_df;
        options.max_features = config.max_features;
        options.seed = mix_seed(config.seed, "train");
        options.mode = UtilityMode::Tstr;
        parts.utility.push_back(tstr_evaluate(*synthetic, test_real, options));
        options.mode = UtilityMode::Trtr;
        parts.utility.push_back(tstr_evaluate(train_real, test_real, options));
        break;
      }
      case Axis::Privacy:
        parts.privacy =
            mia_success_rate(*members, *non_members, *synthetic, config.forest,
                             mix_seed(config.seed, "mia"), config.drop_text);
        break;
    }
  }

  SynEvalReport report = assemble_report(std::move(parts));
  const nlohmann::json doc = report_to_json(report);
  if (config.out.has_value()) {
    std::ofstream json_out(*config.out, std::ios::binary);
    if (!json_out) {
      fail(ErrorCode::Io, "cannot write '" + config.out->string() + "'");
    }
    json_out << doc.dump(2) << '\n';
  }
  const std::string markdown = render_markdown(report);
  if (config.out_md.has_value()) {
    std::ofstream md_out(*config.out_md, std::ios::binary);
    if (!md_out) {
      fail(ErrorCode::Io, "cannot write '" + config.out_md->string() + "'");
    }
    md_out << markdown;
  } else {
    out_stream << markdown;
  }

  bool gate_failed = false;
  for (const FailGate& gate : config.fail_below) {
    const double value = gate_value(doc, gate.key);
    if (value < gate.threshold) {
      out_stream << "FAIL-BELOW " << gate.key << " = " << value << " < "
                 << gate.threshold << "\n";
      gate_failed = true;
    }
  }
  return gate_failed ? 3 : 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out_stream,
        std::ostream& err_stream) {
  try {
    return run_checked(config, out_stream);
  } catch (const Error& e) {
    err_stream << e.what() << "\n";
    return e.code() == ErrorCode::Config ? 2 : 1;
  } catch (const std::exception& e) {
    err_stream << "E_RUNTIME: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace syneval
