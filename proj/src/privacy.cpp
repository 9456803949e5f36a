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

#include "syneval/privacy.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "syneval/rng.hpp"
#include "syneval/text_fidelity.hpp"

namespace syneval {

void LabelEncoder::fit_column(const std::string& column,
                              const std::vector<Cell>& cells) {
  auto& codes = codes_[column];
  int next = static_cast<int>(codes.size()) + 1;
  for (const Cell& cell : cells) {
    if (!cell.has_value()) continue;
    if (codes.emplace(*cell, next).second) ++next;
  }
}

int LabelEncoder::encode(const std::string& column, const Cell& cell) const {
  auto it = codes_.find(column);
  if (it == codes_.end()) {
    fail(ErrorCode::UnknownColumn, "encoder was not fitted on '" + column + "'");
  }
  if (!cell.has_value()) return 0;
  auto code = it->second.find(*cell);
  return code == it->second.end() ? 0 : code->second;
}

bool LabelEncoder::has_column(const std::string& column) const {
  return codes_.count(column) > 0;
}

std::size_t LabelEncoder::category_count(const std::string& column) const {
  auto it = codes_.find(column);
  return it == codes_.end() ? 0 : it->second.size();
}

LabelEncoder fit_label_encoder(const Table& t,
                               const std::vector<std::string>& columns) {
  LabelEncoder encoder;
  for (const auto& name : columns) {
    encoder.fit_column(name, t.column(name));  // throws UnknownColumn
  }
  return encoder;
}

namespace {

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

std::vector<std::string> FeatureEncoder::feature_names() const {
  std::vector<std::string> names;
  for (const auto& spec : feature_schema.columns()) names.push_back(spec.name);
  return names;
}

FeatureEncoder fit_feature_encoder(const Table& fit_data,
                                   const Schema& feature_schema,
                                   bool drop_text) {
  FeatureEncoder encoder;
  encoder.drop_text = drop_text;
  std::vector<ColumnSpec> kept;
  for (const ColumnSpec& spec : feature_schema.columns()) {
    if (spec.kind == ColumnKind::Text && drop_text) continue;
    kept.push_back(spec);
    const auto& cells = fit_data.column(spec.name);
    switch (spec.kind) {
      case ColumnKind::Continuous: {
        std::vector<double> values =
            fit_data.numeric_values(fit_data.column_index(spec.name));
        if (values.empty()) {
          fail(ErrorCode::FitError, "continuous column '" + spec.name +
                                        "' is all-null in the fitting data");
        }
        encoder.medians[spec.name] = median_of(std::move(values));
        break;
      }
      case ColumnKind::Discrete:
      case ColumnKind::Identifier:
        encoder.labels.fit_column(spec.name, cells);
        break;
      case ColumnKind::Text:
        break;  // token-count feature needs no fitting
    }
  }
  encoder.feature_schema = Schema(std::move(kept));
  return encoder;
}

std::vector<std::vector<double>> build_feature_matrix(
    const Table& t, const FeatureEncoder& encoder) {
  // Resolve columns up front so a missing column fails before any work.
  std::vector<std::size_t> indices;
  for (const ColumnSpec& spec : encoder.feature_schema.columns()) {
    auto idx = t.schema().find(spec.name);
    if (!idx.has_value()) {
      fail(ErrorCode::SchemaMismatch,
           "table lacks feature column '" + spec.name + "'");
    }
    if (t.schema().at(*idx).kind != spec.kind) {
      fail(ErrorCode::SchemaMismatch,
           "feature column '" + spec.name + "' has mismatched kind");
    }
    indices.push_back(*idx);
  }
  std::vector<std::vector<double>> rows(
      t.row_count(), std::vector<double>(indices.size(), 0.0));
  for (std::size_t f = 0; f < indices.size(); ++f) {
    const ColumnSpec& spec = encoder.feature_schema.at(f);
    const auto& cells = t.column(indices[f]);
    for (std::size_t r = 0; r < t.row_count(); ++r) {
      const Cell& cell = cells[r];
      double value = 0.0;
      switch (spec.kind) {
        case ColumnKind::Continuous:
          value = cell.has_value() ? *parse_finite_double(*cell)
                                   : encoder.medians.at(spec.name);
          break;
        case ColumnKind::Discrete:
        case ColumnKind::Identifier:
          value = static_cast<double>(encoder.labels.encode(spec.name, cell));
          break;
        case ColumnKind::Text:
          value = cell.has_value()
                      ? static_cast<double>(tokenize(*cell).size())
                      : 0.0;
          break;
      }
      rows[r][f] = value;
    }
  }
  return rows;
}

namespace {

// Columns present in all three tables with one agreed kind, in member order.
Schema shared_feature_schema(const Table& members, const Table& nonmembers,
                             const Table& synthetic,
                             std::vector<std::string>& warnings) {
  std::vector<ColumnSpec> specs;
  for (const ColumnSpec& spec : members.schema().columns()) {
    auto ni = nonmembers.schema().find(spec.name);
    auto si = synthetic.schema().find(spec.name);
    if (!ni.has_value() || !si.has_value()) continue;
    if (nonmembers.schema().at(*ni).kind != spec.kind ||
        synthetic.schema().at(*si).kind != spec.kind) {
      warnings.push_back("column '" + spec.name +
                         "' has differing kinds across inputs; skipped");
      continue;
    }
    ColumnSpec feature = spec;
    feature.nullable = true;
    specs.push_back(std::move(feature));
  }
  return Schema(std::move(specs));
}

Table project(const Table& t, const Schema& schema) {
  std::vector<std::vector<Cell>> columns;
  columns.reserve(schema.size());
  for (const ColumnSpec& spec : schema.columns()) {
    columns.push_back(t.column(spec.name));
  }
  return Table::from_columns(schema, std::move(columns));
}

Table concat(const Table& a, const Table& b, const Schema& schema) {
  std::vector<std::vector<Cell>> columns;
  columns.reserve(schema.size());
  for (std::size_t c = 0; c < schema.size(); ++c) {
    std::vector<Cell> merged = a.column(schema.at(c).name);
    const auto& tail = b.column(schema.at(c).name);
    merged.insert(merged.end(), tail.begin(), tail.end());
    columns.push_back(std::move(merged));
  }
  return Table::from_columns(schema, std::move(columns));
}

}  // namespace

MiaDatasets assemble_mia(const Table& real_members, const Table& real_nonmembers,
                         const Table& synthetic, std::uint64_t seed,
                         bool drop_text) {
  if (real_members.row_count() == 0 || real_nonmembers.row_count() == 0 ||
      synthetic.row_count() == 0) {
    fail(ErrorCode::EmptyTable, "all three attack inputs need rows");
  }
  MiaDatasets data;
  data.seed = seed;
  Schema feature_schema = shared_feature_schema(real_members, real_nonmembers,
                                                synthetic, data.warnings);
  if (feature_schema.empty()) {
    fail(ErrorCode::NoScorableColumns,
         "the three inputs share no usable feature columns");
  }

  // Half-up rounding sends a lone synthetic row to the training half.
  auto [syn_train, syn_test] = split_rows(synthetic, 0.5, seed);
  Table members_proj = project(real_members, feature_schema);
  Table nonmembers_proj = project(real_nonmembers, feature_schema);
  Table syn_train_proj = project(syn_train, feature_schema);
  Table syn_test_proj = project(syn_test, feature_schema);

  Table fit_data = concat(members_proj, syn_train_proj, feature_schema);
  FeatureEncoder encoder = fit_feature_encoder(fit_data, feature_schema, drop_text);
  data.feature_names = encoder.feature_names();

  data.train_rows = build_feature_matrix(members_proj, encoder);
  auto syn_train_rows = build_feature_matrix(syn_train_proj, encoder);
  data.train_labels.assign(members_proj.row_count(), 1);
  data.train_labels.insert(data.train_labels.end(), syn_train_rows.size(), 0);
  data.train_rows.insert(data.train_rows.end(),
                         std::make_move_iterator(syn_train_rows.begin()),
                         std::make_move_iterator(syn_train_rows.end()));

  data.test_rows = build_feature_matrix(nonmembers_proj, encoder);
  auto syn_test_rows = build_feature_matrix(syn_test_proj, encoder);
  data.test_labels.assign(nonmembers_proj.row_count(), 1);
  data.test_labels.insert(data.test_labels.end(), syn_test_rows.size(), 0);
  data.test_rows.insert(data.test_rows.end(),
                        std::make_move_iterator(syn_test_rows.begin()),
                        std::make_move_iterator(syn_test_rows.end()));

  if (syn_test_rows.empty()) {
    data.warnings.push_back(
        "synthetic split left the test set without synthetic rows");
  }
  return data;
}

namespace {

// Exact split comparison. A candidate is summarized by the integer sums
// A = sum_c count_c^2 and sizes per child; purer children have a larger
// A_l/n_l + A_r/n_r. Rational comparison keeps impurity ties exact so the
// (feature, threshold) tie-break is deterministic.
struct SplitScore {
  unsigned long long a_left = 0, n_left = 0;
  unsigned long long a_right = 0, n_right = 0;
};

bool score_greater(const SplitScore& x, const SplitScore& y) {
  using Wide = unsigned __int128;
  const Wide lhs = (Wide(x.a_left) * x.n_right + Wide(x.a_right) * x.n_left) *
                   (Wide(y.n_left) * y.n_right);
  const Wide rhs = (Wide(y.a_left) * y.n_right + Wide(y.a_right) * y.n_left) *
                   (Wide(x.n_left) * x.n_right);
  return lhs > rhs;
}

// True when the split strictly reduces the node's Gini impurity.
bool improves(const SplitScore& s, unsigned long long a_parent,
              unsigned long long n_parent) {
  using Wide = unsigned __int128;
  const Wide lhs =
      (Wide(s.a_left) * s.n_right + Wide(s.a_right) * s.n_left) * n_parent;
  const Wide rhs = Wide(a_parent) * (Wide(s.n_left) * s.n_right);
  return lhs > rhs;
}

struct TreeBuilder {
  const std::vector<std::vector<double>>& rows;
  const std::vector<std::size_t>& class_of;
  std::size_t classes;
  std::size_t features;
  const ForestParams& params;
  Rng& rng;
  std::vector<TreeNode> nodes;

  std::vector<std::size_t> candidate_features() {
    const std::size_t want =
        params.feature_subsample.has_value()
            ? std::min<std::size_t>(static_cast<std::size_t>(
                                        std::max(1, *params.feature_subsample)),
                                    features)
            : static_cast<std::size_t>(
                  std::ceil(std::sqrt(static_cast<double>(features))));
    std::vector<std::size_t> pool(features);
    for (std::size_t i = 0; i < features; ++i) pool[i] = i;
    for (std::size_t i = 0; i < want; ++i) {
      std::size_t j = i + static_cast<std::size_t>(rng.below(features - i));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(want);
    std::sort(pool.begin(), pool.end());
    return pool;
  }

  std::vector<std::uint32_t> count_classes(const std::vector<std::size_t>& sample) {
    std::vector<std::uint32_t> counts(classes, 0);
    for (std::size_t i : sample) counts[class_of[i]] += 1;
    return counts;
  }

  int build(std::vector<std::size_t>& sample, int depth) {
    auto counts = count_classes(sample);
    const std::size_t node_index = nodes.size();
    nodes.push_back({});
    nodes[node_index].class_counts = counts;

    unsigned long long a_parent = 0;
    std::size_t present = 0;
    for (std::uint32_t c : counts) {
      a_parent += static_cast<unsigned long long>(c) * c;
      present += c > 0 ? 1 : 0;
    }
    const bool depth_capped =
        params.max_depth.has_value() && depth >= *params.max_depth;
    if (present <= 1 || depth_capped ||
        sample.size() < 2 * static_cast<std::size_t>(params.min_samples_leaf)) {
      return static_cast<int>(node_index);
    }

    // Best split over the sampled feature subset.
    bool found = false;
    SplitScore best;
    std::size_t best_feature = 0;
    double best_threshold = 0.0;
    std::vector<std::pair<double, std::size_t>> ordered(sample.size());
    for (std::size_t feature : candidate_features()) {
      for (std::size_t i = 0; i < sample.size(); ++i) {
        ordered[i] = {rows[sample[i]][feature], sample[i]};
      }
      std::sort(ordered.begin(), ordered.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      std::vector<unsigned long long> left_counts(classes, 0);
      unsigned long long a_left = 0;
      std::size_t n_left = 0;
      for (std::size_t i = 0; i + 1 < ordered.size(); ++i) {
        const std::size_t cls = class_of[ordered[i].second];
        a_left += 2 * left_counts[cls] + 1;
        left_counts[cls] += 1;
        ++n_left;
        if (ordered[i].first == ordered[i + 1].first) continue;
        const std::size_t n_right = ordered.size() - n_left;
        if (n_left < static_cast<std::size_t>(params.min_samples_leaf) ||
            n_right < static_cast<std::size_t>(params.min_samples_leaf)) {
          continue;
        }
        double threshold = 0.5 * (ordered[i].first + ordered[i + 1].first);
        // Keep routing consistent with the evaluated partition when the
        // midpoint rounds up to the next sample value.
        if (threshold >= ordered[i + 1].first) threshold = ordered[i].first;
        unsigned long long a_right = 0;
        for (std::size_t c = 0; c < classes; ++c) {
          const unsigned long long rc = counts[c] - left_counts[c];
          a_right += rc * rc;
        }
        SplitScore candidate{a_left, n_left, a_right, n_right};
        if (!improves(candidate, a_parent, sample.size())) continue;
        if (!found || score_greater(candidate, best)) {
          found = true;
          best = candidate;
          best_feature = feature;
          best_threshold = threshold;
        }
      }
    }
    if (!found) return static_cast<int>(node_index);

    std::vector<std::size_t> left_sample, right_sample;
    left_sample.reserve(sample.size());
    right_sample.reserve(sample.size());
    for (std::size_t i : sample) {
      (rows[i][best_feature] <= best_threshold ? left_sample : right_sample)
          .push_back(i);
    }
    sample.clear();
    sample.shrink_to_fit();

    nodes[node_index].feature = static_cast<int>(best_feature);
    nodes[node_index].threshold = best_threshold;
    const int left = build(left_sample, depth + 1);
    nodes[node_index].left = left;
    const int right = build(right_sample, depth + 1);
    nodes[node_index].right = right;
    return static_cast<int>(node_index);
  }
};

}  // namespace

std::size_t DecisionTree::leaf_for(const std::vector<double>& row) const {
  std::size_t node = 0;
  while (nodes[node].feature >= 0) {
    node = row[static_cast<std::size_t>(nodes[node].feature)] <=
                   nodes[node].threshold
               ? static_cast<std::size_t>(nodes[node].left)
               : static_cast<std::size_t>(nodes[node].right);
  }
  return node;
}

ForestModel train_forest(const std::vector<std::vector<double>>& rows,
                         const std::vector<int>& labels,
                         const ForestParams& params, std::uint64_t seed) {
  if (rows.size() != labels.size()) {
    fail(ErrorCode::DimensionMismatch, "row and label counts differ");
  }
  if (rows.size() < 2) {
    fail(ErrorCode::EmptyInput, "forest training needs at least two rows");
  }
  const std::size_t features = rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != features) {
      fail(ErrorCode::DimensionMismatch, "ragged feature rows");
    }
  }
  if (features == 0) {
    fail(ErrorCode::DimensionMismatch, "rows carry no features");
  }

  ForestModel model;
  model.params = params;
  model.seed = seed;
  model.n_features = features;
  std::set<int> distinct(labels.begin(), labels.end());
  if (distinct.size() < 2) {
    fail(ErrorCode::DegenerateLabels, "forest training needs two classes");
  }
  model.class_labels.assign(distinct.begin(), distinct.end());

  std::vector<std::size_t> class_of(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    class_of[i] = static_cast<std::size_t>(
        std::lower_bound(model.class_labels.begin(), model.class_labels.end(),
                         labels[i]) -
        model.class_labels.begin());
  }

  model.trees.reserve(static_cast<std::size_t>(params.n_trees));
  for (int t = 0; t < params.n_trees; ++t) {
    Rng tree_rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
    std::vector<std::size_t> sample;
    sample.reserve(rows.size());
    if (params.bootstrap) {
      for (std::size_t i = 0; i < rows.size(); ++i) {
        sample.push_back(static_cast<std::size_t>(tree_rng.below(rows.size())));
      }
    } else {
      for (std::size_t i = 0; i < rows.size(); ++i) sample.push_back(i);
    }
    TreeBuilder builder{rows,   class_of, model.class_labels.size(),
                        features, params,   tree_rng,
                        {}};
    builder.build(sample, 0);
    model.trees.push_back(DecisionTree{std::move(builder.nodes)});
  }
  return model;
}

int forest_predict(const ForestModel& model, const std::vector<double>& row) {
  if (row.size() != model.n_features) {
    fail(ErrorCode::DimensionMismatch,
         "row has " + std::to_string(row.size()) + " features, model expects " +
             std::to_string(model.n_features));
  }
  std::vector<std::size_t> votes(model.class_labels.size(), 0);
  for (const DecisionTree& tree : model.trees) {
    const TreeNode& leaf = tree.nodes[tree.leaf_for(row)];
    std::size_t best = 0;
    for (std::size_t c = 1; c < leaf.class_counts.size(); ++c) {
      if (leaf.class_counts[c] > leaf.class_counts[best]) best = c;
    }
    votes[best] += 1;
  }
  std::size_t winner = 0;
  for (std::size_t c = 1; c < votes.size(); ++c) {
    if (votes[c] > votes[winner]) winner = c;
  }
  return model.class_labels[winner];
}

PrivacyReport mia_success_rate(const Table& real_members,
                               const Table& real_nonmembers,
                               const Table& synthetic,
                               const ForestParams& params, std::uint64_t seed,
                               bool drop_text) {
  MiaDatasets data =
      assemble_mia(real_members, real_nonmembers, synthetic, seed, drop_text);
  ForestModel model = train_forest(data.train_rows, data.train_labels, params,
                                   mix_seed(seed, "forest"));
  PrivacyReport report;
  report.seed = seed;
  report.warnings = data.warnings;
  report.n_train = data.train_rows.size();
  report.n_test = data.test_rows.size();
  std::size_t correct = 0;
  for (std::size_t i = 0; i < data.test_rows.size(); ++i) {
    const int predicted = forest_predict(model, data.test_rows[i]);
    const int actual = data.test_labels[i];
    correct += predicted == actual ? 1 : 0;
    if (actual == 1) {
      (predicted == 1 ? report.member_as_member : report.member_as_synthetic) += 1;
    } else {
      (predicted == 0 ? report.synthetic_as_synthetic
                      : report.synthetic_as_member) += 1;
    }
  }
  report.success_rate = report.n_test == 0
                            ? 0.0
                            : static_cast<double>(correct) /
                                  static_cast<double>(report.n_test);
  return report;
}

}  // namespace syneval
