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

#ifndef SYNEVAL_FIDELITY_HPP_
#define SYNEVAL_FIDELITY_HPP_

#include <map>
#include <string>
#include <vector>

#include "syneval/table.hpp"

namespace syneval {

enum class ShapeMethod { Ks, Tvd };

std::string_view shape_method_name(ShapeMethod m);

struct ColumnShape {
  ShapeMethod method = ShapeMethod::Ks;
  double score = 0.0;
};

struct UniquenessRatio {
  double real = 0.0;
  double synthetic = 0.0;
};

struct FidelityReport {
  double sps = 0.0;
  double integrity = 0.0;
  std::map<std::string, double> integrity_by_column;
  double column_shapes = 0.0;
  std::map<std::string, ColumnShape> shapes_by_column;
  // Distinct/total for columns flagged unique in the schema. Informational
  // only; never folded into the integrity score.
  std::map<std::string, UniquenessRatio> uniqueness_by_column;
  std::vector<std::string> only_in_real;
  std::vector<std::string> only_in_synthetic;
  std::vector<std::string> warnings;
};

/// Jaccard overlap of the two column-name sets; 1.0 when both are empty.
double structure_preserving_score(const Table& real, const Table& synthetic);

/// Continuous: fraction of non-null synthetic values inside the real
/// [min, max] (endpoints included). Discrete/Identifier: fraction found in
/// the real category set. Text columns are not scored.
double integrity_score_column(ColumnKind kind, const std::vector<Cell>& real_col,
                              const std::vector<Cell>& syn_col);

struct IntegrityResult {
  double overall = 0.0;
  std::map<std::string, double> by_column;
  std::vector<std::string> warnings;
};

/// Per-column integrity over shared non-text columns; overall is the mean of
/// the continuous-group mean and the discrete-group mean (one group alone
/// stands for the whole).
IntegrityResult integrity_score(const Table& real, const Table& synthetic);

/// 1 - D where D is the two-sample Kolmogorov-Smirnov statistic over the
/// pooled sample points.
double ks_complement(std::vector<double> real_values,
                     std::vector<double> syn_values);

/// 1 - TVD where TVD is half the L1 distance between the category frequency
/// distributions over the union of categories.
double tv_complement(const std::vector<std::string>& real_values,
                     const std::vector<std::string>& syn_values);

struct ColumnShapesResult {
  double overall = 0.0;
  std::map<std::string, ColumnShape> by_column;
  std::vector<std::string> warnings;
};

/// Continuous columns scored by ks_complement, Discrete/Identifier by
/// tv_complement; overall is the unweighted mean.
ColumnShapesResult column_shapes_score(const Table& real, const Table& synthetic);

/// Full non-text fidelity axis: SPS, integrity, column shapes, uniqueness
/// ratios, plus column-coverage warnings.
FidelityReport evaluate_fidelity(const Table& real, const Table& synthetic);

}  // namespace syneval

#endif  // SYNEVAL_FIDELITY_HPP_
