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

#ifndef SYNEVAL_PRIVACY_HPP_
#define SYNEVAL_PRIVACY_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "syneval/table.hpp"

namespace syneval {

/// Per-column category -> integer code, assigned in first-seen order from 1.
/// Code 0 is reserved for categories unseen at fit time (and nulls).
class LabelEncoder {
 public:
  void fit_column(const std::string& column, const std::vector<Cell>& cells);
  int encode(const std::string& column, const Cell& cell) const;
  bool has_column(const std::string& column) const;
  std::size_t category_count(const std::string& column) const;

 private:
  std::map<std::string, std::map<std::string, int>> codes_;
};

LabelEncoder fit_label_encoder(const Table& t,
                               const std::vector<std::string>& columns);

/// Column transformer fitted on training data: continuous columns pass
/// through (nulls imputed with the fitted median), discrete/identifier
/// columns are label-encoded, text columns become a token-count feature.
struct FeatureEncoder {
  Schema feature_schema;  // feature order
  LabelEncoder labels;
  std::map<std::string, double> medians;
  bool drop_text = false;

  std::vector<std::string> feature_names() const;
};

FeatureEncoder fit_feature_encoder(const Table& fit_data,
                                   const Schema& feature_schema,
                                   bool drop_text = false);

std::vector<std::vector<double>> build_feature_matrix(const Table& t,
                                                      const FeatureEncoder& encoder);

/// Member = 1 (real), non-member = 0 (synthetic).
struct MiaDatasets {
  std::vector<std::vector<double>> train_rows;
  std::vector<int> train_labels;
  std::vector<std::vector<double>> test_rows;
  std::vector<int> test_labels;
  std::vector<std::string> feature_names;
  std::uint64_t seed = 0;
  std::vector<std::string> warnings;
};

/// Training set: real members (label 1) plus a seeded half of the synthetic
/// rows (label 0). Test set: real non-members (label 1) plus the remaining
/// synthetic half (label 0). Encoder and medians are fitted on the training
/// portion only.
MiaDatasets assemble_mia(const Table& real_members, const Table& real_nonmembers,
                         const Table& synthetic, std::uint64_t seed,
                         bool drop_text = false);

struct ForestParams {
  int n_trees = 100;
  std::optional<int> max_depth;  // absent = unlimited
  int min_samples_leaf = 1;
  // Candidate features per split; absent = ceil(sqrt(F)).
  std::optional<int> feature_subsample;
  bool bootstrap = true;
};

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  std::vector<std::uint32_t> class_counts;  // leaf distribution
};

struct DecisionTree {
  std::vector<TreeNode> nodes;  // node 0 is the root

  std::size_t leaf_for(const std::vector<double>& row) const;
};

struct ForestModel {
  std::vector<DecisionTree> trees;
  std::vector<int> class_labels;  // ascending
  std::size_t n_features = 0;
  ForestParams params;
  std::uint64_t seed = 0;
};

/// CART trees on bootstrap resamples; splits minimize Gini impurity over a
/// random feature subset, with exact tie-breaking by (lower feature index,
/// lower threshold). Per-tree seeds derive from the master seed.
ForestModel train_forest(const std::vector<std::vector<double>>& rows,
                         const std::vector<int>& labels,
                         const ForestParams& params, std::uint64_t seed);

/// Majority vote over per-tree leaf argmaxes; all ties resolve toward the
/// lowest class label.
int forest_predict(const ForestModel& model, const std::vector<double>& row);

struct PrivacyReport {
  double success_rate = 0.0;
  std::size_t n_train = 0;
  std::size_t n_test = 0;
  // Confusion counts over the test set; they sum to n_test.
  std::size_t member_as_member = 0;
  std::size_t member_as_synthetic = 0;
  std::size_t synthetic_as_synthetic = 0;
  std::size_t synthetic_as_member = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> warnings;
};

/// End-to-end membership inference attack: assemble, encode, train the
/// forest, and report its test accuracy as the attack success rate.
PrivacyReport mia_success_rate(const Table& real_members,
                               const Table& real_nonmembers,
                               const Table& synthetic,
                               const ForestParams& params, std::uint64_t seed,
                               bool drop_text = false);

}  // namespace syneval

#endif  // SYNEVAL_PRIVACY_HPP_
