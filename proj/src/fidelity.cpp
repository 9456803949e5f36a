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

#include "syneval/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

namespace syneval {

namespace {

bool is_scorable_kind(ColumnKind kind) {
  return kind == ColumnKind::Continuous || kind == ColumnKind::Discrete ||
         kind == ColumnKind::Identifier;
}

std::vector<double> parse_non_null(const std::vector<Cell>& cells,
                                   const char* side) {
  std::vector<double> out;
  out.reserve(cells.size());
  for (const Cell& cell : cells) {
    if (!cell.has_value()) continue;
    auto v = parse_finite_double(*cell);
    if (!v.has_value()) {
      fail(ErrorCode::KindViolation,
           std::string("non-numeric value '") + *cell + "' in " + side +
               " continuous column");
    }
    out.push_back(*v);
  }
  return out;
}

std::size_t non_null_count(const std::vector<Cell>& cells) {
  std::size_t n = 0;
  for (const Cell& cell : cells) n += cell.has_value() ? 1 : 0;
  return n;
}

double mean(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

// Shared columns in real-schema order whose kinds agree and are scorable;
// kind disagreements and text columns are reported via `warnings`.
std::vector<std::pair<std::string, ColumnKind>> shared_scorable_columns(
    const Table& real, const Table& synthetic, std::vector<std::string>& warnings) {
  std::vector<std::pair<std::string, ColumnKind>> out;
  for (const ColumnSpec& spec : real.schema().columns()) {
    auto syn_idx = synthetic.schema().find(spec.name);
    if (!syn_idx.has_value()) continue;
    const ColumnSpec& syn_spec = synthetic.schema().at(*syn_idx);
    if (spec.kind != syn_spec.kind) {
      warnings.push_back("column '" + spec.name + "' is " +
                         std::string(column_kind_name(spec.kind)) +
                         " in real but " +
                         std::string(column_kind_name(syn_spec.kind)) +
                         " in synthetic; skipped");
      continue;
    }
    if (!is_scorable_kind(spec.kind)) continue;
    out.emplace_back(spec.name, spec.kind);
  }
  return out;
}

}  // namespace

std::string_view shape_method_name(ShapeMethod m) {
  return m == ShapeMethod::Ks ? "ks_complement" : "tv_complement";
}

double structure_preserving_score(const Table& real, const Table& synthetic) {
  std::set<std::string> r, s;
  for (const auto& spec : real.schema().columns()) r.insert(spec.name);
  for (const auto& spec : synthetic.schema().columns()) s.insert(spec.name);
  if (r.empty() && s.empty()) return 1.0;
  std::size_t intersection = 0;
  for (const auto& name : r) intersection += s.count(name);
  const std::size_t uni = r.size() + s.size() - intersection;
  return static_cast<double>(intersection) / static_cast<double>(uni);
}

double integrity_score_column(ColumnKind kind, const std::vector<Cell>& real_col,
                              const std::vector<Cell>& syn_col) {
  if (kind == ColumnKind::Text) {
    fail(ErrorCode::KindMismatch, "text columns are not integrity-scored");
  }
  if (non_null_count(real_col) == 0) {
    fail(ErrorCode::EmptyRealColumn, "real column has no non-null values");
  }
  if (kind == ColumnKind::Continuous) {
    std::vector<double> real_vals = parse_non_null(real_col, "real");
    auto [lo_it, hi_it] = std::minmax_element(real_vals.begin(), real_vals.end());
    const double lo = *lo_it, hi = *hi_it;
    std::vector<double> syn_vals = parse_non_null(syn_col, "synthetic");
    if (syn_vals.empty()) return 1.0;  // nothing to violate the range
    std::size_t inside = 0;
    for (double v : syn_vals) inside += (v >= lo && v <= hi) ? 1 : 0;
    return static_cast<double>(inside) / static_cast<double>(syn_vals.size());
  }
  std::unordered_set<std::string> categories;
  for (const Cell& cell : real_col) {
    if (cell.has_value()) categories.insert(*cell);
  }
  std::size_t total = 0, found = 0;
  for (const Cell& cell : syn_col) {
    if (!cell.has_value()) continue;
    ++total;
    found += categories.count(*cell);
  }
  if (total == 0) return 1.0;
  return static_cast<double>(found) / static_cast<double>(total);
}

IntegrityResult integrity_score(const Table& real, const Table& synthetic) {
  IntegrityResult result;
  std::vector<double> continuous_scores, discrete_scores;
  for (const auto& [name, kind] :
       shared_scorable_columns(real, synthetic, result.warnings)) {
    const auto& real_col = real.column(name);
    const auto& syn_col = synthetic.column(name);
    if (non_null_count(real_col) == 0) {
      result.warnings.push_back("column '" + name +
                                "' has no non-null real values; skipped");
      continue;
    }
    double score = integrity_score_column(kind, real_col, syn_col);
    result.by_column[name] = score;
    (kind == ColumnKind::Continuous ? continuous_scores : discrete_scores)
        .push_back(score);
  }
  if (continuous_scores.empty() && discrete_scores.empty()) {
    fail(ErrorCode::NoScorableColumns,
         "no shared continuous or discrete columns to score");
  }
  if (continuous_scores.empty()) {
    result.overall = mean(discrete_scores);
  } else if (discrete_scores.empty()) {
    result.overall = mean(continuous_scores);
  } else {
    result.overall = 0.5 * (mean(continuous_scores) + mean(discrete_scores));
  }
  return result;
}

double ks_complement(std::vector<double> real_values,
                     std::vector<double> syn_values) {
  if (real_values.empty() || syn_values.empty()) {
    fail(ErrorCode::EmptyInput, "ks_complement needs non-empty samples");
  }
  std::sort(real_values.begin(), real_values.end());
  std::sort(syn_values.begin(), syn_values.end());
  const double n = static_cast<double>(real_values.size());
  const double m = static_cast<double>(syn_values.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  // Walk the pooled sample; the ECDFs are right-continuous step functions,
  // so the statistic is attained just after each pooled point.
  while (i < real_values.size() || j < syn_values.size()) {
    double x;
    if (i == real_values.size()) {
      x = syn_values[j];
    } else if (j == syn_values.size()) {
      x = real_values[i];
    } else {
      x = std::min(real_values[i], syn_values[j]);
    }
    while (i < real_values.size() && real_values[i] == x) ++i;
    while (j < syn_values.size() && syn_values[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n -
                             static_cast<double>(j) / m));
  }
  return 1.0 - d;
}

double tv_complement(const std::vector<std::string>& real_values,
                     const std::vector<std::string>& syn_values) {
  if (real_values.empty() || syn_values.empty()) {
    fail(ErrorCode::EmptyInput, "tv_complement needs non-empty samples");
  }
  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
  for (const auto& v : real_values) counts[v].first++;
  for (const auto& v : syn_values) counts[v].second++;
  const double n = static_cast<double>(real_values.size());
  const double m = static_cast<double>(syn_values.size());
  double l1 = 0.0;
  for (const auto& [_, c] : counts) {
    l1 += std::abs(static_cast<double>(c.first) / n -
                   static_cast<double>(c.second) / m);
  }
  return 1.0 - 0.5 * l1;
}

ColumnShapesResult column_shapes_score(const Table& real, const Table& synthetic) {
  ColumnShapesResult result;
  std::vector<double> scores;
  for (const auto& [name, kind] :
       shared_scorable_columns(real, synthetic, result.warnings)) {
    const auto& real_col = real.column(name);
    const auto& syn_col = synthetic.column(name);
    if (non_null_count(real_col) == 0 || non_null_count(syn_col) == 0) {
      result.warnings.push_back("column '" + name +
                                "' is all-null on one side; shape skipped");
      continue;
    }
    ColumnShape shape;
    if (kind == ColumnKind::Continuous) {
      shape.method = ShapeMethod::Ks;
      shape.score = ks_complement(real.numeric_values(real.column_index(name)),
                                  synthetic.numeric_values(synthetic.column_index(name)));
    } else {
      shape.method = ShapeMethod::Tvd;
      shape.score = tv_complement(real.string_values(real.column_index(name)),
                                  synthetic.string_values(synthetic.column_index(name)));
    }
    result.by_column[name] = shape;
    scores.push_back(shape.score);
  }
  if (scores.empty()) {
    fail(ErrorCode::NoScorableColumns, "no shared columns with a shape score");
  }
  result.overall = mean(scores);
  return result;
}

FidelityReport evaluate_fidelity(const Table& real, const Table& synthetic) {
  FidelityReport report;
  report.sps = structure_preserving_score(real, synthetic);

  for (const auto& spec : real.schema().columns()) {
    if (!synthetic.schema().find(spec.name).has_value()) {
      report.only_in_real.push_back(spec.name);
    }
  }
  for (const auto& spec : synthetic.schema().columns()) {
    if (!real.schema().find(spec.name).has_value()) {
      report.only_in_synthetic.push_back(spec.name);
    }
  }
  std::sort(report.only_in_real.begin(), report.only_in_real.end());
  std::sort(report.only_in_synthetic.begin(), report.only_in_synthetic.end());

  // Shared column order is compared but never scored.
  std::vector<std::string> shared_real_order, shared_syn_order;
  for (const auto& spec : real.schema().columns()) {
    if (synthetic.schema().find(spec.name).has_value()) {
      shared_real_order.push_back(spec.name);
    }
  }
  for (const auto& spec : synthetic.schema().columns()) {
    if (real.schema().find(spec.name).has_value()) {
      shared_syn_order.push_back(spec.name);
    }
  }
  if (shared_real_order != shared_syn_order) {
    report.warnings.push_back(
        "shared columns appear in a different order in the synthetic table");
  }

  IntegrityResult integrity = integrity_score(real, synthetic);
  report.integrity = integrity.overall;
  report.integrity_by_column = std::move(integrity.by_column);
  for (auto& w : integrity.warnings) report.warnings.push_back(std::move(w));

  ColumnShapesResult shapes = column_shapes_score(real, synthetic);
  report.column_shapes = shapes.overall;
  report.shapes_by_column = std::move(shapes.by_column);
  for (auto& w : shapes.warnings) report.warnings.push_back(std::move(w));

  // De-duplicate warnings emitted by both passes.
  std::vector<std::string> unique_warnings;
  for (auto& w : report.warnings) {
    if (std::find(unique_warnings.begin(), unique_warnings.end(), w) ==
        unique_warnings.end()) {
      unique_warnings.push_back(std::move(w));
    }
  }
  report.warnings = std::move(unique_warnings);

  auto uniqueness_ratio = [](const std::vector<Cell>& cells) {
    std::unordered_set<std::string> distinct;
    std::size_t total = 0;
    for (const Cell& cell : cells) {
      if (!cell.has_value()) continue;
      ++total;
      distinct.insert(*cell);
    }
    return total == 0 ? 1.0
                      : static_cast<double>(distinct.size()) /
                            static_cast<double>(total);
  };
  for (const auto& spec : real.schema().columns()) {
    if (!spec.unique) continue;
    UniquenessRatio ratio;
    ratio.real = uniqueness_ratio(real.column(spec.name));
    auto syn_idx = synthetic.schema().find(spec.name);
    ratio.synthetic =
        syn_idx.has_value() ? uniqueness_ratio(synthetic.column(*syn_idx)) : 1.0;
    report.uniqueness_by_column[spec.name] = ratio;
  }
  return report;
}

}  // namespace syneval
