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

#ifndef SYNEVAL_UTILITY_HPP_
#define SYNEVAL_UTILITY_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "syneval/table.hpp"

namespace syneval {

/// Bag-of-words vocabulary fitted on training texts only.
struct Vocabulary {
  std::vector<std::string> words;  // index order
  std::vector<std::uint32_t> doc_freq;
  std::unordered_map<std::string, std::uint32_t> index;
  std::uint32_t min_df = 1;
  std::uint32_t max_features = 5000;

  std::size_t size() const { return words.size(); }
};

/// Tokens with document frequency >= min_df, truncated to max_features by
/// (df desc, word asc); that order is also the feature index order.
Vocabulary fit_vocabulary(const std::vector<std::string>& texts,
                          std::uint32_t min_df, std::uint32_t max_features);

/// Sparse term-frequency vector, sorted by feature index. Out-of-vocabulary
/// tokens are dropped.
using SparseVec = std::vector<std::pair<std::uint32_t, double>>;
SparseVec vectorize(std::string_view text, const Vocabulary& vocab);

struct LogRegHyper {
  double learning_rate = 0.1;
  int epochs = 300;
  double l2 = 1e-4;
};

/// Multinomial softmax regression, one class per distinct rating value.
struct LogRegModel {
  std::vector<double> weights;       // classes x features, row-major
  std::vector<double> bias;          // per class
  std::vector<double> class_labels;  // sorted ascending
  std::size_t n_features = 0;
  LogRegHyper hyper;
  std::uint64_t seed = 0;
  // Loss at initialization and after each epoch (epochs + 1 entries).
  std::vector<double> loss_history;
};

/// Mean cross-entropy plus (l2/2)*||W||^2; bias is unregularized.
double logreg_loss(const std::vector<double>& weights,
                   const std::vector<double>& bias,
                   const std::vector<SparseVec>& X,
                   const std::vector<std::size_t>& class_of, std::size_t classes,
                   std::size_t features, double l2);

/// Analytic gradient of logreg_loss; returns (dW, db).
std::pair<std::vector<double>, std::vector<double>> logreg_gradient(
    const std::vector<double>& weights, const std::vector<double>& bias,
    const std::vector<SparseVec>& X, const std::vector<std::size_t>& class_of,
    std::size_t classes, std::size_t features, double l2);

/// Full-batch gradient descent from zero-initialized weights; deterministic
/// given the data (the seed is recorded for future minibatching).
LogRegModel train_logreg(const std::vector<SparseVec>& X,
                         const std::vector<double>& y, const LogRegHyper& hyper,
                         std::uint64_t seed);

std::vector<double> predict_proba(const LogRegModel& model, const SparseVec& x);

/// Argmax-probability class label; ties break toward the lower rating.
double predict_rating(const LogRegModel& model, const SparseVec& x);

/// Fraction of predictions within `tolerance` of the actual rating.
double tolerance_accuracy(std::span<const double> pred,
                          std::span<const double> actual, double tolerance);

double mae(std::span<const double> pred, std::span<const double> actual);

enum class UtilityMode { Tstr, Trtr };
std::string_view utility_mode_name(UtilityMode mode);

struct UtilityOptions {
  std::string text_column = "text";
  std::string rating_column = "rating";
  double tolerance = 1.0;
  LogRegHyper hyper;
  std::uint32_t min_df = 1;
  std::uint32_t max_features = 5000;
  std::uint64_t seed = 0;
  UtilityMode mode = UtilityMode::Tstr;
};

struct UtilityReport {
  UtilityMode mode = UtilityMode::Tstr;
  double accuracy = 0.0;
  double mae = 0.0;
  double tolerance = 1.0;
  std::size_t n_train = 0;
  std::size_t n_test = 0;
};

/// Fits the vocabulary and model on `train` only, evaluates on `test_real`.
/// Rows with a null text or rating are excluded on either side.
UtilityReport tstr_evaluate(const Table& train, const Table& test_real,
                            const UtilityOptions& options);

}  // namespace syneval

#endif  // SYNEVAL_UTILITY_HPP_
