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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "syneval/io.hpp"
#include "syneval/runner.hpp"

namespace {

using syneval::Axis;
using syneval::RunConfig;

struct CliValues {
  std::string real, synthetic, members, non_members;
  std::string schema, lexicon, stopwords, out, out_md, config;
  std::vector<std::string> fail_below;
  std::string text_col, rating_col;
  double tolerance = 1.0;
  int epochs = 300;
  double lr = 0.1, l2 = 1e-4;
  std::uint32_t min_df = 1, max_features = 5000;
  std::vector<std::string> id_cols;
  int n_trees = 100, max_depth = 0, min_samples_leaf = 1;
  bool drop_text = false;
  double holdout = 0.3;
  std::uint64_t seed = 42;
  bool deterministic = false;
  bool axis_fidelity = false, axis_text = false, axis_utility = false,
       axis_privacy = false;
};

void add_data_options(CLI::App* sub, CliValues& v) {
  sub->add_option("--real", v.real, "Real reference dataset (.csv/.jsonl)");
  sub->add_option("--synthetic", v.synthetic, "Synthetic dataset (.csv/.jsonl)");
  sub->add_option("--members", v.members, "Real member rows for the MIA");
  sub->add_option("--non-members", v.non_members,
                  "Real non-member rows for the MIA");
  sub->add_option("--schema", v.schema, "Schema JSON file");
  sub->add_option("--lexicon", v.lexicon, "Sentiment lexicon file override");
  sub->add_option("--stopwords", v.stopwords, "Stopword file override");
  sub->add_option("--out", v.out, "Write the JSON report here");
  sub->add_option("--out-md", v.out_md,
                  "Write the markdown report here (default: stdout)");
  sub->add_option("--config", v.config, "JSON config mirroring these flags");
  sub->add_option("--fail-below", v.fail_below,
                  "Repeatable KEY=VAL gate, e.g. fidelity.column_shapes=0.7");
  sub->add_option("--text-col", v.text_col, "Text column name (default: text)");
  sub->add_option("--rating-col", v.rating_col,
                  "Rating column name (default: rating)");
  sub->add_option("--tolerance", v.tolerance, "Rating tolerance for accuracy");
  sub->add_option("--epochs", v.epochs, "Gradient-descent epochs");
  sub->add_option("--lr", v.lr, "Learning rate");
  sub->add_option("--l2", v.l2, "L2 penalty strength");
  sub->add_option("--min-df", v.min_df, "Minimum document frequency");
  sub->add_option("--max-features", v.max_features, "Vocabulary size cap");
  sub->add_option("--holdout", v.holdout,
                  "Real-data fraction held out as the utility test set");
  sub->add_option("--id-cols", v.id_cols,
                  "Columns to treat as identifiers (repeatable)");
  sub->add_option("--n-trees", v.n_trees, "Attack forest size");
  sub->add_option("--max-depth", v.max_depth,
                  "Attack tree depth cap (0 = unlimited)");
  sub->add_option("--min-samples-leaf", v.min_samples_leaf,
                  "Minimum samples per leaf");
  sub->add_flag("--drop-text", v.drop_text,
                "Exclude text length features from the attack");
  sub->add_option("--seed", v.seed, "Master seed (env SYNEVAL_SEED as fallback)");
  sub->add_flag("--deterministic", v.deterministic,
                "Pin the report timestamp for byte-identical output");
}

std::string read_file_or_die(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw syneval::Error(syneval::ErrorCode::Config,
                         "--config: cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

RunConfig build_config(const CLI::App* sub, const CliValues& v,
                       std::vector<Axis> fixed_axes) {
  RunConfig cfg;

  if (const char* env_seed = std::getenv("SYNEVAL_SEED")) {
    try {
      cfg.seed = std::stoull(env_seed);
    } catch (const std::exception&) {
      throw syneval::Error(syneval::ErrorCode::Config,
                           "SYNEVAL_SEED is not an integer");
    }
  }
  if (sub->count("--config")) {
    syneval::apply_config_json(cfg, read_file_or_die(v.config));
  }

  auto set_path = [&](const char* flag, const std::string& value,
                      std::optional<std::filesystem::path>& out) {
    if (sub->count(flag)) out = std::filesystem::path(value);
  };
  set_path("--real", v.real, cfg.real);
  set_path("--synthetic", v.synthetic, cfg.synthetic);
  set_path("--members", v.members, cfg.members);
  set_path("--non-members", v.non_members, cfg.non_members);
  set_path("--schema", v.schema, cfg.schema_path);
  set_path("--lexicon", v.lexicon, cfg.lexicon);
  set_path("--stopwords", v.stopwords, cfg.stopwords);
  set_path("--out", v.out, cfg.out);
  set_path("--out-md", v.out_md, cfg.out_md);

  if (sub->count("--text-col")) cfg.text_column = v.text_col;
  if (sub->count("--rating-col")) cfg.rating_column = v.rating_col;
  if (sub->count("--tolerance")) cfg.tolerance = v.tolerance;
  if (sub->count("--epochs")) cfg.hyper.epochs = v.epochs;
  if (sub->count("--lr")) cfg.hyper.learning_rate = v.lr;
  if (sub->count("--l2")) cfg.hyper.l2 = v.l2;
  if (sub->count("--min-df")) cfg.min_df = v.min_df;
  if (sub->count("--max-features")) cfg.max_features = v.max_features;
  if (sub->count("--holdout")) cfg.holdout = v.holdout;
  if (sub->count("--id-cols")) cfg.id_columns = v.id_cols;
  if (sub->count("--n-trees")) cfg.forest.n_trees = v.n_trees;
  if (sub->count("--max-depth")) {
    cfg.forest.max_depth =
        v.max_depth <= 0 ? std::nullopt : std::optional<int>(v.max_depth);
  }
  if (sub->count("--min-samples-leaf")) {
    cfg.forest.min_samples_leaf = v.min_samples_leaf;
  }
  if (sub->count("--drop-text")) cfg.drop_text = v.drop_text;
  if (sub->count("--seed")) cfg.seed = v.seed;
  if (sub->count("--deterministic")) cfg.deterministic = v.deterministic;

  for (const std::string& gate : v.fail_below) {
    const std::size_t eq = gate.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == gate.size()) {
      throw syneval::Error(syneval::ErrorCode::Config,
                           "--fail-below expects KEY=VAL, got '" + gate + "'");
    }
    try {
      cfg.fail_below.push_back(
          {gate.substr(0, eq), std::stod(gate.substr(eq + 1))});
    } catch (const std::exception&) {
      throw syneval::Error(syneval::ErrorCode::Config,
                           "--fail-below threshold in '" + gate +
                               "' is not a number");
    }
  }

  if (!fixed_axes.empty()) {
    cfg.axes = std::move(fixed_axes);
  } else {
    std::vector<Axis> toggled;
    if (v.axis_fidelity) toggled.push_back(Axis::Fidelity);
    if (v.axis_text) toggled.push_back(Axis::Text);
    if (v.axis_utility) toggled.push_back(Axis::Utility);
    if (v.axis_privacy) toggled.push_back(Axis::Privacy);
    if (!toggled.empty()) cfg.axes = std::move(toggled);
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SynEval: fidelity, utility, and privacy evaluation of "
               "synthetic tabular data"};
  app.require_subcommand(1);

  CliValues values;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Run every axis the supplied inputs allow");
  add_data_options(evaluate, values);
  evaluate->add_flag("--fidelity", values.axis_fidelity, "Force the fidelity axis");
  evaluate->add_flag("--text", values.axis_text, "Force the text axis");
  evaluate->add_flag("--utility", values.axis_utility, "Force the utility axis");
  evaluate->add_flag("--privacy", values.axis_privacy, "Force the privacy axis");

  CLI::App* fidelity = app.add_subcommand("fidelity", "Non-text fidelity only");
  CLI::App* text = app.add_subcommand("text", "Text fidelity only");
  CLI::App* utility = app.add_subcommand("utility", "TSTR/TRTR utility only");
  CLI::App* privacy = app.add_subcommand("privacy", "Membership inference only");
  for (CLI::App* sub : {fidelity, text, utility, privacy}) {
    add_data_options(sub, values);
  }

  std::string infer_input, infer_out;
  CLI::App* schema_infer =
      app.add_subcommand("schema-infer", "Infer a schema JSON from a dataset");
  schema_infer->add_option("input", infer_input, "Dataset (.csv/.jsonl)")
      ->required();
  schema_infer->add_option("--out", infer_out, "Write the schema here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "E_CONFIG: " << e.what() << "\n";
    return 2;
  }

  try {
    if (schema_infer->parsed()) {
      const std::string text_out =
          syneval::schema_to_json_text(syneval::infer_schema(infer_input));
      if (!infer_out.empty()) {
        std::ofstream out(infer_out, std::ios::binary);
        if (!out) {
          throw syneval::Error(syneval::ErrorCode::Io,
                               "cannot write '" + infer_out + "'");
        }
        out << text_out;
      } else {
        std::cout << text_out;
      }
      return 0;
    }

    const CLI::App* sub = nullptr;
    std::vector<Axis> fixed_axes;
    if (evaluate->parsed()) {
      sub = evaluate;
    } else if (fidelity->parsed()) {
      sub = fidelity;
      fixed_axes = {Axis::Fidelity};
    } else if (text->parsed()) {
      sub = text;
      fixed_axes = {Axis::Text};
    } else if (utility->parsed()) {
      sub = utility;
      fixed_axes = {Axis::Utility};
    } else if (privacy->parsed()) {
      sub = privacy;
      fixed_axes = {Axis::Privacy};
    }
    RunConfig cfg = build_config(sub, values, std::move(fixed_axes));
    return syneval::run(cfg, std::cout, std::cerr);
  } catch (const syneval::Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == syneval::ErrorCode::Config ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "E_RUNTIME: " << e.what() << "\n";
    return 1;
  }
}
