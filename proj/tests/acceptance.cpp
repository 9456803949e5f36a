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

// Acceptance suite. Each criterion prints one PASS/FAIL line; the process
// exits with the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "support/toy_corpus.hpp"
#include "syneval/fidelity.hpp"
#include "syneval/privacy.hpp"
#include "syneval/rng.hpp"
#include "syneval/table.hpp"
#include "syneval/utility.hpp"

using namespace syneval;
using testsupport::copy_identifiers_from;
using testsupport::toy_reviews;
namespace fs = std::filesystem;

namespace {

constexpr const char* kCliPath = SYNEVAL_CLI;
constexpr const char* kFixturesDir = SYNEVAL_FIXTURES_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

int run_cli(const std::string& args) {
  const std::string command =
      std::string(kCliPath) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// ---------------------------------------------------------------------------
// Criterion 1: brute-force oracles for the two column-shape metrics.

double ks_bruteforce(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  auto diff_at = [&](double x) {
    std::size_t ca = 0, cb = 0;
    for (double v : a) ca += v <= x ? 1 : 0;
    for (double v : b) cb += v <= x ? 1 : 0;
    return std::abs(static_cast<double>(ca) / static_cast<double>(a.size()) -
                    static_cast<double>(cb) / static_cast<double>(b.size()));
  };
  for (double x : a) d = std::max(d, diff_at(x));
  for (double x : b) d = std::max(d, diff_at(x));
  return 1.0 - d;
}

double tv_bruteforce(const std::vector<std::string>& a,
                     const std::vector<std::string>& b) {
  std::map<std::string, std::size_t> ca, cb;
  for (const auto& v : a) ca[v] += 1;
  for (const auto& v : b) cb[v] += 1;
  std::map<std::string, int> keys;
  for (const auto& [k, _] : ca) keys[k] = 1;
  for (const auto& [k, _] : cb) keys[k] = 1;
  double l1 = 0.0;
  for (const auto& [k, _] : keys) {
    const double pa =
        ca.count(k) ? static_cast<double>(ca[k]) / static_cast<double>(a.size())
                    : 0.0;
    const double pb =
        cb.count(k) ? static_cast<double>(cb[k]) / static_cast<double>(b.size())
                    : 0.0;
    l1 += std::abs(pa - pb);
  }
  return 1.0 - 0.5 * l1;
}

bool criterion_metric_oracles(std::string& detail) {
  Rng rng(10001);
  for (int pair = 0; pair < 1000; ++pair) {
    const std::size_t n = 1 + rng.below(1000);
    const std::size_t m = 1 + rng.below(1000);
    std::vector<double> a(n), b(m);
    const bool ties = rng.chance(0.5);
    for (auto& v : a) {
      v = ties ? static_cast<double>(rng.range(0, 19)) : rng.uniform(-5, 5);
    }
    for (auto& v : b) {
      v = ties ? static_cast<double>(rng.range(0, 19)) : rng.uniform(-4, 6);
    }
    const double got = ks_complement(a, b);
    const double want = ks_bruteforce(a, b);
    if (std::abs(got - want) > 1e-12) {
      detail = "ks pair " + std::to_string(pair) + ": |" + std::to_string(got) +
               " - " + std::to_string(want) + "| > 1e-12";
      return false;
    }
  }
  static const char* cats[] = {"a", "b", "c", "d", "e", "f",
                               "g", "h", "i", "j", "k", "l"};
  for (int pair = 0; pair < 1000; ++pair) {
    std::vector<std::string> a(1 + rng.below(1000)), b(1 + rng.below(1000));
    for (auto& v : a) v = cats[rng.below(12)];
    for (auto& v : b) v = cats[rng.below(9)];
    if (tv_complement(a, b) != tv_bruteforce(a, b)) {
      detail = "tv pair " + std::to_string(pair) + " differs from the oracle";
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 2: exact formula spot-checks.

Table named_columns(const std::vector<std::string>& names) {
  std::vector<ColumnSpec> specs;
  for (const auto& n : names) specs.push_back({n, ColumnKind::Discrete, true, false});
  return Table::from_columns(Schema(std::move(specs)),
                             std::vector<std::vector<Cell>>(names.size()));
}

std::vector<Cell> cells_of(const std::vector<std::string>& values) {
  std::vector<Cell> out;
  for (const auto& v : values) out.emplace_back(v);
  return out;
}

bool criterion_formula_spot_checks(std::string& detail) {
  const double sps = structure_preserving_score(
      named_columns({"a", "b", "c", "d"}), named_columns({"a", "b", "e"}));
  if (sps != 0.4) {
    detail = "SPS = " + std::to_string(sps) + ", want exactly 0.4";
    return false;
  }
  const double is = integrity_score_column(
      ColumnKind::Discrete, cells_of({"1", "2", "3", "4", "5"}),
      cells_of({"1", "2", "6", "6"}));
  if (is != 0.5) {
    detail = "discrete IS = " + std::to_string(is) + ", want exactly 0.5";
    return false;
  }
  const double tvc = tv_complement({"A", "B"}, {"A", "A", "A", "B"});
  if (tvc != 0.75) {
    detail = "TVComplement = " + std::to_string(tvc) + ", want exactly 0.75";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 3: self-fidelity of half-vs-half splits.

bool criterion_self_fidelity(std::string& detail) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Table corpus = toy_reviews({.rows = 2000, .seed = 300 + seed});
    auto [half_a, half_b] = split_rows(corpus, 0.5, seed);
    FidelityReport report = evaluate_fidelity(half_a, half_b);
    if (report.sps != 1.0) {
      detail = "seed " + std::to_string(seed) + ": SPS != 1.0";
      return false;
    }
    if (report.integrity < 0.98) {
      detail = "seed " + std::to_string(seed) +
               ": IS = " + std::to_string(report.integrity) + " < 0.98";
      return false;
    }
    if (report.column_shapes < 0.90) {
      detail = "seed " + std::to_string(seed) +
               ": shapes = " + std::to_string(report.column_shapes) + " < 0.90";
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 4: degenerate columns must rank strictly lower.

bool criterion_degenerate_ordering(std::string& detail) {
  Table real = toy_reviews({.rows = 600, .seed = 41});
  Table matched = toy_reviews({.rows = 600, .seed = 42});
  Table degenerate = toy_reviews(
      {.rows = 600, .seed = 42, .zero_votes = true, .invert_verified = true});
  const double matched_score = column_shapes_score(real, matched).overall;
  const double degenerate_score = column_shapes_score(real, degenerate).overall;
  if (!(degenerate_score < matched_score)) {
    detail = "degenerate " + std::to_string(degenerate_score) +
             " !< matched " + std::to_string(matched_score);
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 5: logistic-regression correctness.

bool criterion_logreg(std::string& detail) {
  // Gradient vs central finite differences on 20 random instances.
  Rng rng(50001);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t examples = 5, features = 8, classes = 3;
    std::vector<SparseVec> X;
    std::vector<std::size_t> class_of;
    for (std::size_t i = 0; i < examples; ++i) {
      SparseVec x;
      for (std::size_t f = 0; f < features; ++f) {
        if (rng.chance(0.6)) {
          x.emplace_back(static_cast<std::uint32_t>(f),
                         static_cast<double>(rng.range(1, 4)));
        }
      }
      X.push_back(std::move(x));
      class_of.push_back(rng.below(classes));
    }
    std::vector<double> weights(classes * features), bias(classes);
    for (auto& w : weights) w = rng.uniform(-1, 1);
    for (auto& b : bias) b = rng.uniform(-0.5, 0.5);
    const double l2 = rng.chance(0.5) ? 0.0 : 0.01;

    auto [dw, db] =
        logreg_gradient(weights, bias, X, class_of, classes, features, l2);
    const double h = 1e-4;
    auto loss_at = [&](const std::vector<double>& w, const std::vector<double>& b) {
      return logreg_loss(w, b, X, class_of, classes, features, l2);
    };
    for (std::size_t k = 0; k < weights.size(); ++k) {
      auto wp = weights, wm = weights;
      wp[k] += h;
      wm[k] -= h;
      const double fd = (loss_at(wp, bias) - loss_at(wm, bias)) / (2 * h);
      if (std::abs(fd - dw[k]) > 1e-5) {
        detail = "gradient trial " + std::to_string(trial) + ": weight " +
                 std::to_string(k) + " differs by " + std::to_string(fd - dw[k]);
        return false;
      }
    }
    for (std::size_t c = 0; c < classes; ++c) {
      auto bp = bias, bm = bias;
      bp[c] += h;
      bm[c] -= h;
      const double fd = (loss_at(weights, bp) - loss_at(weights, bm)) / (2 * h);
      if (std::abs(fd - db[c]) > 1e-5) {
        detail = "gradient trial " + std::to_string(trial) + ": bias " +
                 std::to_string(c) + " differs";
        return false;
      }
    }
  }

  // Separable 20-point set trains to 100% accuracy.
  std::vector<SparseVec> X;
  std::vector<double> y;
  for (int i = 0; i < 10; ++i) {
    X.push_back({{0, static_cast<double>(i % 5)}, {1, static_cast<double>(i % 3)}});
    y.push_back(1.0);
    X.push_back({{0, static_cast<double>(6 + i % 5)}, {1, static_cast<double>(i % 3)}});
    y.push_back(5.0);
  }
  LogRegHyper hyper;
  hyper.learning_rate = 0.1;
  hyper.epochs = 1500;
  LogRegModel model = train_logreg(X, y, hyper, 0);
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (predict_rating(model, X[i]) != y[i]) {
      detail = "separable set: point " + std::to_string(i) + " misclassified";
      return false;
    }
  }
  for (std::size_t e = 1; e < model.loss_history.size(); ++e) {
    if (model.loss_history[e] > model.loss_history[e - 1]) {
      detail = "separable set: loss increased at epoch " + std::to_string(e);
      return false;
    }
  }

  // Loss stays non-increasing at the default hyperparameters on text data.
  Table corpus = toy_reviews({.rows = 300, .seed = 55});
  Vocabulary vocab = fit_vocabulary(corpus.string_values(corpus.column_index("text")), 1, 5000);
  std::vector<SparseVec> Xtext;
  std::vector<double> ytext;
  const auto& texts = corpus.column("text");
  const auto& ratings = corpus.column("rating");
  for (std::size_t r = 0; r < corpus.row_count(); ++r) {
    Xtext.push_back(vectorize(*texts[r], vocab));
    ytext.push_back(*parse_finite_double(*ratings[r]));
  }
  LogRegModel text_model = train_logreg(Xtext, ytext, LogRegHyper{}, 0);
  for (std::size_t e = 1; e < text_model.loss_history.size(); ++e) {
    if (text_model.loss_history[e] > text_model.loss_history[e - 1]) {
      detail = "default hyper: loss increased at epoch " + std::to_string(e);
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 6: TSTR sanity on noise-corrupted synthetic text.

bool criterion_tstr_sanity(std::string& detail) {
  Table real = toy_reviews({.rows = 300, .seed = 601});
  Table synthetic = toy_reviews({.rows = 300, .seed = 602, .text_noise = 0.30});
  auto [test_real, train_real] = split_rows(real, 0.3, 603);

  UtilityOptions options;
  options.tolerance = 1.0;
  options.seed = 604;
  options.mode = UtilityMode::Tstr;
  UtilityReport tstr = tstr_evaluate(synthetic, test_real, options);
  options.mode = UtilityMode::Trtr;
  UtilityReport trtr = tstr_evaluate(train_real, test_real, options);
  if (!(trtr.accuracy >= tstr.accuracy)) {
    detail = "TRTR " + std::to_string(trtr.accuracy) + " < TSTR " +
             std::to_string(tstr.accuracy);
    return false;
  }

  double last = -1.0;
  for (double tol : {0.0, 1.0, 2.0, 4.0}) {
    options.mode = UtilityMode::Tstr;
    options.tolerance = tol;
    const double accuracy = tstr_evaluate(synthetic, test_real, options).accuracy;
    if (accuracy < last) {
      detail = "tolerance accuracy not monotone at tol " + std::to_string(tol);
      return false;
    }
    last = accuracy;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 7: MIA calibration over 30 seeds.

bool criterion_mia_calibration(std::string& detail) {
  ForestParams params;  // defaults: 100 trees, unlimited depth, sqrt features
  double fresh_total = 0.0, copied_total = 0.0;
  const int seeds = 30;
  for (int s = 0; s < seeds; ++s) {
    const std::uint64_t base = 700 + static_cast<std::uint64_t>(s) * 13;
    Table members = toy_reviews({.rows = 100, .seed = base, .user_pool = 0,
                                 .asin_pool = 0, .id_offset = 0});
    Table nonmembers = toy_reviews({.rows = 100, .seed = base + 1,
                                    .user_pool = 0, .asin_pool = 0,
                                    .id_offset = 10000});
    Table fresh = toy_reviews({.rows = 200, .seed = base + 2, .user_pool = 0,
                               .asin_pool = 0, .id_offset = 20000});
    Table copied = copy_identifiers_from(fresh, members, 5, base + 3);

    fresh_total += mia_success_rate(members, nonmembers, fresh, params,
                                    base + 4)
                       .success_rate;
    copied_total += mia_success_rate(members, nonmembers, copied, params,
                                     base + 4)
                        .success_rate;
  }
  const double fresh_mean = fresh_total / seeds;
  const double copied_mean = copied_total / seeds;
  if (fresh_mean < 0.40 || fresh_mean > 0.60) {
    detail = "fresh-ID mean success " + std::to_string(fresh_mean) +
             " outside [0.40, 0.60]";
    return false;
  }
  if (copied_mean < 0.90) {
    detail = "copied-ID mean success " + std::to_string(copied_mean) + " < 0.90";
    return false;
  }
  detail = "fresh " + std::to_string(fresh_mean) + ", copied " +
           std::to_string(copied_mean);
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 8: byte-identical deterministic CLI runs.

bool criterion_determinism(std::string& detail) {
  const fs::path dir = fs::temp_directory_path() / "syneval_acceptance";
  fs::create_directories(dir);
  const fs::path out_a = dir / "det_a.json";
  const fs::path out_b = dir / "det_b.json";
  const std::string fixtures(kFixturesDir);
  const std::string common =
      "evaluate --real " + fixtures + "/real.csv --synthetic " + fixtures +
      "/synthetic.csv --members " + fixtures + "/members.csv --non-members " +
      fixtures + "/non_members.csv --schema " + fixtures +
      "/schema.json --seed 11 --deterministic --out ";
  if (run_cli(common + out_a.string()) != 0) {
    detail = "first run did not exit 0";
    return false;
  }
  if (run_cli(common + out_b.string()) != 0) {
    detail = "second run did not exit 0";
    return false;
  }
  const std::string a = slurp(out_a), b = slurp(out_b);
  if (a.empty() || a != b) {
    detail = "reports differ or are empty";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 9: depth-1 single trees equal the exhaustive best stump.

struct Stump {
  bool split = false;
  std::size_t feature = 0;
  double threshold = 0.0;
  int left_label = 0;
  int right_label = 0;
  int majority_label = 0;
};

Stump exhaustive_stump(const std::vector<std::vector<double>>& rows,
                       const std::vector<int>& labels) {
  std::vector<int> classes(labels.begin(), labels.end());
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  auto index_of = [&](int label) {
    return static_cast<std::size_t>(
        std::lower_bound(classes.begin(), classes.end(), label) -
        classes.begin());
  };
  std::vector<unsigned long long> total(classes.size(), 0);
  for (int label : labels) total[index_of(label)] += 1;
  unsigned long long a_parent = 0;
  for (auto c : total) a_parent += c * c;

  Stump stump;
  std::size_t majority = 0;
  for (std::size_t c = 1; c < total.size(); ++c) {
    if (total[c] > total[majority]) majority = c;
  }
  stump.majority_label = classes[majority];

  const unsigned long long n = rows.size();
  unsigned long long best_al = 0, best_nl = 0, best_ar = 0, best_nr = 0;
  for (std::size_t f = 0; f < rows.front().size(); ++f) {
    std::vector<std::pair<double, int>> values;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      values.push_back({rows[i][f], labels[i]});
    }
    std::sort(values.begin(), values.end());
    std::vector<unsigned long long> left(classes.size(), 0);
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
      left[index_of(values[i].second)] += 1;
      if (values[i].first == values[i + 1].first) continue;
      unsigned long long al = 0, ar = 0;
      for (std::size_t c = 0; c < classes.size(); ++c) {
        al += left[c] * left[c];
        const unsigned long long rc = total[c] - left[c];
        ar += rc * rc;
      }
      const unsigned long long nl = i + 1, nr = n - nl;
      using Wide = unsigned __int128;
      // Must strictly beat the unsplit parent.
      if ((Wide(al) * nr + Wide(ar) * nl) * n <= Wide(a_parent) * (Wide(nl) * nr)) {
        continue;
      }
      bool better;
      if (!stump.split) {
        better = true;
      } else {
        const Wide lhs =
            (Wide(al) * nr + Wide(ar) * nl) * (Wide(best_nl) * best_nr);
        const Wide rhs = (Wide(best_al) * best_nr + Wide(best_ar) * best_nl) *
                         (Wide(nl) * nr);
        better = lhs > rhs;  // exact ties keep the earlier (feature, threshold)
      }
      if (better) {
        stump.split = true;
        best_al = al;
        best_nl = nl;
        best_ar = ar;
        best_nr = nr;
        stump.feature = f;
        stump.threshold = 0.5 * (values[i].first + values[i + 1].first);
        std::size_t bl = 0, br = 0;
        for (std::size_t c = 0; c < classes.size(); ++c) {
          if (left[c] > left[bl]) bl = c;
          if (total[c] - left[c] > total[br] - left[br]) br = c;
        }
        stump.left_label = classes[bl];
        stump.right_label = classes[br];
      }
    }
  }
  return stump;
}

bool criterion_stump_oracle(std::string& detail) {
  Rng rng(90001);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.below(99);
    const std::size_t features = 1 + rng.below(4);
    std::vector<std::vector<double>> rows(n, std::vector<double>(features));
    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t f = 0; f < features; ++f) {
        rows[i][f] = static_cast<double>(rng.range(0, 15));
      }
      labels[i] = static_cast<int>(rng.below(2));
    }
    bool two = false;
    for (int label : labels) two = two || label != labels[0];
    if (!two) labels[0] = 1 - labels[0];

    ForestParams params;
    params.n_trees = 1;
    params.max_depth = 1;
    params.bootstrap = false;
    params.feature_subsample = static_cast<int>(features);
    ForestModel model = train_forest(rows, labels, params, 0);
    Stump oracle = exhaustive_stump(rows, labels);
    const auto& root = model.trees[0].nodes[0];

    if (oracle.split != (root.feature >= 0)) {
      detail = "trial " + std::to_string(trial) + ": split/leaf disagreement";
      return false;
    }
    if (oracle.split && (root.feature != static_cast<int>(oracle.feature) ||
                         root.threshold != oracle.threshold)) {
      detail = "trial " + std::to_string(trial) + ": split differs (feature " +
               std::to_string(root.feature) + " vs " +
               std::to_string(oracle.feature) + ")";
      return false;
    }
    for (const auto& row : rows) {
      const int want = oracle.split ? (row[oracle.feature] <= oracle.threshold
                                           ? oracle.left_label
                                           : oracle.right_label)
                                    : oracle.majority_label;
      if (forest_predict(model, row) != want) {
        detail = "trial " + std::to_string(trial) + ": prediction differs";
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Criterion 10: end-to-end walkthrough over the bundled fixtures.

bool criterion_walkthrough(std::string& detail) {
  const fs::path dir = fs::temp_directory_path() / "syneval_acceptance";
  fs::create_directories(dir);
  const fs::path out_json = dir / "walkthrough.json";
  const fs::path out_md = dir / "walkthrough.md";
  const std::string fixtures(kFixturesDir);
  const int code = run_cli(
      "evaluate --real " + fixtures + "/real.csv --synthetic " + fixtures +
      "/synthetic.csv --members " + fixtures + "/members.csv --non-members " +
      fixtures + "/non_members.csv --schema " + fixtures +
      "/schema.json --seed 7 --out " + out_json.string() + " --out-md " +
      out_md.string());
  if (code != 0) {
    detail = "CLI exited " + std::to_string(code);
    return false;
  }
  const std::string md = slurp(out_md);
  for (const char* shape :
       {"| Structure Preserving Score | ", "| Sentiment Distribution | ",
        "| Data Type | MAE | Accuracy |", "| MIA Model | Successful Rate |",
        "| Average length (words) | "}) {
    if (md.find(shape) == std::string::npos) {
      detail = std::string("markdown lacks table shape: ") + shape;
      return false;
    }
  }
  auto doc = nlohmann::json::parse(slurp(out_json));
  for (const char* axis : {"fidelity", "text_fidelity", "utility", "privacy"}) {
    if (doc.at(axis).is_null()) {
      detail = std::string("report axis missing: ") + axis;
      return false;
    }
  }
  return true;
}

struct Criterion {
  const char* name;
  double time_limit_seconds;  // 0 = no limit
  std::function<bool(std::string&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"metric-oracle equivalence (ks 1e-12 on 1000 pairs, tv exact)", 10.0,
       criterion_metric_oracles},
      {"formula spot-checks (SPS 0.4, IS 0.5, TVC 0.75, exact)", 0.0,
       criterion_formula_spot_checks},
      {"self-fidelity on half-vs-half splits (10 seeds)", 5.0,
       criterion_self_fidelity},
      {"degenerate-column ordering (zeroed votes, inverted boolean)", 0.0,
       criterion_degenerate_ordering},
      {"logistic regression (gradient 1e-5, monotone loss, separable 100%)",
       2.0, criterion_logreg},
      {"TSTR sanity (TRTR >= corrupted TSTR, tolerance monotone)", 10.0,
       criterion_tstr_sanity},
      {"MIA calibration (fresh IDs chance-level, copied IDs >= 0.90)", 60.0,
       criterion_mia_calibration},
      {"deterministic evaluate runs are byte-identical", 0.0,
       criterion_determinism},
      {"decision-stump oracle equivalence (100 datasets, exact)", 0.0,
       criterion_stump_oracle},
      {"end-to-end walkthrough renders all four table shapes", 30.0,
       criterion_walkthrough},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& criterion = criteria[i];
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.body(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && criterion.time_limit_seconds > 0.0 &&
        elapsed >= criterion.time_limit_seconds) {
      ok = false;
      detail = "time limit " + std::to_string(criterion.time_limit_seconds) +
               "s exceeded";
    }
    std::printf("[%2zu/10] %s (%.2fs) %s%s%s\n", i + 1, ok ? "PASS" : "FAIL",
                elapsed, criterion.name, detail.empty() ? "" : " -- ",
                detail.c_str());
    failures += ok ? 0 : 1;
  }
  if (failures == 0) {
    std::printf("acceptance: all 10 criteria passed\n");
  } else {
    std::printf("acceptance: %d criteria FAILED\n", failures);
  }
  return failures;
}
