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

#include "syneval/utility.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "syneval/text_fidelity.hpp"

namespace syneval {

Vocabulary fit_vocabulary(const std::vector<std::string>& texts,
                          std::uint32_t min_df, std::uint32_t max_features) {
  if (texts.empty()) fail(ErrorCode::EmptyInput, "fit_vocabulary needs texts");
  if (min_df == 0 || max_features == 0) {
    fail(ErrorCode::InvalidArgument, "min_df and max_features must be >= 1");
  }
  std::map<std::string, std::uint32_t> df;
  for (const auto& text : texts) {
    std::set<std::string> seen;
    for (auto& token : tokenize(text)) seen.insert(std::move(token));
    for (const auto& token : seen) df[token] += 1;
  }
  std::vector<std::pair<std::string, std::uint32_t>> entries;
  for (const auto& [word, count] : df) {
    if (count >= min_df) entries.emplace_back(word, count);
  }
  if (entries.empty()) {
    fail(ErrorCode::EmptyVocabulary,
         "no token reaches min_df=" + std::to_string(min_df));
  }
  // df desc, word asc; map iteration already yields words ascending.
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (entries.size() > max_features) entries.resize(max_features);

  Vocabulary vocab;
  vocab.min_df = min_df;
  vocab.max_features = max_features;
  vocab.words.reserve(entries.size());
  vocab.doc_freq.reserve(entries.size());
  for (std::uint32_t i = 0; i < entries.size(); ++i) {
    vocab.index.emplace(entries[i].first, i);
    vocab.words.push_back(std::move(entries[i].first));
    vocab.doc_freq.push_back(entries[i].second);
  }
  return vocab;
}

SparseVec vectorize(std::string_view text, const Vocabulary& vocab) {
  std::map<std::uint32_t, double> counts;
  for (const auto& token : tokenize(text)) {
    auto it = vocab.index.find(token);
    if (it != vocab.index.end()) counts[it->second] += 1.0;
  }
  return SparseVec(counts.begin(), counts.end());
}

namespace {

// Softmax probabilities for one example; numerically shifted by the max
// logit.
std::vector<double> softmax_scores(const std::vector<double>& weights,
                                   const std::vector<double>& bias,
                                   const SparseVec& x, std::size_t classes,
                                   std::size_t features) {
  std::vector<double> z(bias);
  for (std::size_t c = 0; c < classes; ++c) {
    const double* row = weights.data() + c * features;
    double dot = 0.0;
    for (const auto& [idx, value] : x) dot += row[idx] * value;
    z[c] += dot;
  }
  const double zmax = *std::max_element(z.begin(), z.end());
  double denom = 0.0;
  for (double& v : z) {
    v = std::exp(v - zmax);
    denom += v;
  }
  for (double& v : z) v /= denom;
  return z;
}

}  // namespace

double logreg_loss(const std::vector<double>& weights,
                   const std::vector<double>& bias,
                   const std::vector<SparseVec>& X,
                   const std::vector<std::size_t>& class_of, std::size_t classes,
                   std::size_t features, double l2) {
  double loss = 0.0;
  for (std::size_t i = 0; i < X.size(); ++i) {
    auto p = softmax_scores(weights, bias, X[i], classes, features);
    loss -= std::log(std::max(p[class_of[i]], 1e-300));
  }
  loss /= static_cast<double>(X.size());
  double reg = 0.0;
  for (double w : weights) reg += w * w;
  return loss + 0.5 * l2 * reg;
}

std::pair<std::vector<double>, std::vector<double>> logreg_gradient(
    const std::vector<double>& weights, const std::vector<double>& bias,
    const std::vector<SparseVec>& X, const std::vector<std::size_t>& class_of,
    std::size_t classes, std::size_t features, double l2) {
  std::vector<double> dw(classes * features, 0.0);
  std::vector<double> db(classes, 0.0);
  for (std::size_t i = 0; i < X.size(); ++i) {
    auto p = softmax_scores(weights, bias, X[i], classes, features);
    p[class_of[i]] -= 1.0;
    for (std::size_t c = 0; c < classes; ++c) {
      db[c] += p[c];
      double* row = dw.data() + c * features;
      for (const auto& [idx, value] : X[i]) row[idx] += p[c] * value;
    }
  }
  const double inv_n = 1.0 / static_cast<double>(X.size());
  for (double& v : db) v *= inv_n;
  for (std::size_t k = 0; k < dw.size(); ++k) {
    dw[k] = dw[k] * inv_n + l2 * weights[k];
  }
  return {std::move(dw), std::move(db)};
}

LogRegModel train_logreg(const std::vector<SparseVec>& X,
                         const std::vector<double>& y, const LogRegHyper& hyper,
                         std::uint64_t seed) {
  if (X.size() != y.size()) {
    fail(ErrorCode::DimensionMismatch,
         "feature and label counts differ: " + std::to_string(X.size()) +
             " vs " + std::to_string(y.size()));
  }
  if (X.size() < 2) {
    fail(ErrorCode::EmptyInput, "training needs at least two examples");
  }
  LogRegModel model;
  model.hyper = hyper;
  model.seed = seed;

  std::set<double> labels(y.begin(), y.end());
  if (labels.size() < 2) {
    fail(ErrorCode::DegenerateLabels, "training labels hold a single class");
  }
  model.class_labels.assign(labels.begin(), labels.end());
  const std::size_t classes = model.class_labels.size();

  std::size_t features = 0;
  for (const auto& x : X) {
    for (const auto& [idx, _] : x) {
      features = std::max<std::size_t>(features, idx + 1);
    }
  }
  model.n_features = features;

  std::vector<std::size_t> class_of(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    class_of[i] = static_cast<std::size_t>(
        std::lower_bound(model.class_labels.begin(), model.class_labels.end(),
                         y[i]) -
        model.class_labels.begin());
  }

  model.weights.assign(classes * features, 0.0);
  model.bias.assign(classes, 0.0);
  model.loss_history.reserve(static_cast<std::size_t>(hyper.epochs) + 1);
  model.loss_history.push_back(logreg_loss(model.weights, model.bias, X,
                                           class_of, classes, features,
                                           hyper.l2));
  for (int epoch = 0; epoch < hyper.epochs; ++epoch) {
    auto [dw, db] = logreg_gradient(model.weights, model.bias, X, class_of,
                                    classes, features, hyper.l2);
    for (std::size_t k = 0; k < model.weights.size(); ++k) {
      model.weights[k] -= hyper.learning_rate * dw[k];
    }
    for (std::size_t c = 0; c < classes; ++c) {
      model.bias[c] -= hyper.learning_rate * db[c];
    }
    model.loss_history.push_back(logreg_loss(model.weights, model.bias, X,
                                             class_of, classes, features,
                                             hyper.l2));
  }
  return model;
}

std::vector<double> predict_proba(const LogRegModel& model, const SparseVec& x) {
  for (const auto& [idx, _] : x) {
    if (idx >= model.n_features) {
      fail(ErrorCode::DimensionMismatch,
           "feature index " + std::to_string(idx) + " out of range");
    }
  }
  return softmax_scores(model.weights, model.bias, x,
                        model.class_labels.size(), model.n_features);
}

double predict_rating(const LogRegModel& model, const SparseVec& x) {
  auto p = predict_proba(model, x);
  std::size_t best = 0;
  for (std::size_t c = 1; c < p.size(); ++c) {
    if (p[c] > p[best]) best = c;  // strict: ties keep the lower rating
  }
  return model.class_labels[best];
}

double tolerance_accuracy(std::span<const double> pred,
                          std::span<const double> actual, double tolerance) {
  if (pred.size() != actual.size() || pred.empty()) {
    fail(ErrorCode::LengthMismatch,
         "prediction and actual vectors must have equal non-zero length");
  }
  std::size_t hits = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    hits += (std::abs(pred[i] - actual[i]) <= tolerance) ? 1 : 0;
  }
  return static_cast<double>(hits) / static_cast<double>(pred.size());
}

double mae(std::span<const double> pred, std::span<const double> actual) {
  if (pred.size() != actual.size() || pred.empty()) {
    fail(ErrorCode::LengthMismatch,
         "prediction and actual vectors must have equal non-zero length");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    sum += std::abs(pred[i] - actual[i]);
  }
  return sum / static_cast<double>(pred.size());
}

std::string_view utility_mode_name(UtilityMode mode) {
  return mode == UtilityMode::Tstr ? "TSTR" : "TRTR";
}

namespace {

// Paired (text, rating) rows with both sides non-null.
std::pair<std::vector<std::string>, std::vector<double>> text_rating_pairs(
    const Table& t, const std::string& text_column,
    const std::string& rating_column) {
  const std::size_t text_idx = t.column_index(text_column);
  const std::size_t rating_idx = t.column_index(rating_column);
  if (t.schema().at(text_idx).kind != ColumnKind::Text) {
    fail(ErrorCode::KindMismatch,
         "column '" + text_column + "' must have kind text");
  }
  const ColumnKind rating_kind = t.schema().at(rating_idx).kind;
  if (rating_kind != ColumnKind::Discrete &&
      rating_kind != ColumnKind::Continuous) {
    fail(ErrorCode::KindMismatch,
         "column '" + rating_column + "' must be discrete or continuous");
  }
  std::vector<std::string> texts;
  std::vector<double> ratings;
  for (std::size_t r = 0; r < t.row_count(); ++r) {
    const Cell& text = t.column(text_idx)[r];
    const Cell& rating = t.column(rating_idx)[r];
    if (!text.has_value() || !rating.has_value()) continue;
    auto value = parse_finite_double(*rating);
    if (!value.has_value()) {
      fail(ErrorCode::KindViolation, "rating '" + *rating + "' at row " +
                                         std::to_string(r + 1) +
                                         " is not numeric");
    }
    texts.push_back(*text);
    ratings.push_back(*value);
  }
  return {std::move(texts), std::move(ratings)};
}

}  // namespace

UtilityReport tstr_evaluate(const Table& train, const Table& test_real,
                            const UtilityOptions& options) {
  auto [train_texts, train_ratings] =
      text_rating_pairs(train, options.text_column, options.rating_column);
  auto [test_texts, test_ratings] =
      text_rating_pairs(test_real, options.text_column, options.rating_column);
  if (train_texts.empty() || test_texts.empty()) {
    fail(ErrorCode::EmptyInput, "no usable (text, rating) pairs");
  }

  Vocabulary vocab =
      fit_vocabulary(train_texts, options.min_df, options.max_features);
  std::vector<SparseVec> X;
  X.reserve(train_texts.size());
  for (const auto& text : train_texts) X.push_back(vectorize(text, vocab));
  LogRegModel model = train_logreg(X, train_ratings, options.hyper, options.seed);

  std::vector<double> predictions;
  predictions.reserve(test_texts.size());
  for (const auto& text : test_texts) {
    predictions.push_back(predict_rating(model, vectorize(text, vocab)));
  }

  UtilityReport report;
  report.mode = options.mode;
  report.tolerance = options.tolerance;
  report.n_train = train_texts.size();
  report.n_test = test_texts.size();
  report.accuracy = tolerance_accuracy(predictions, test_ratings, options.tolerance);
  report.mae = mae(predictions, test_ratings);
  return report;
}

}  // namespace syneval
