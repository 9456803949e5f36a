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

#ifndef SYNEVAL_TABLE_HPP_
#define SYNEVAL_TABLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "syneval/error.hpp"

namespace syneval {

enum class ColumnKind { Continuous, Discrete, Text, Identifier };

std::string_view column_kind_name(ColumnKind kind);
std::optional<ColumnKind> column_kind_from_name(std::string_view name);

struct ColumnSpec {
  std::string name;
  ColumnKind kind = ColumnKind::Text;
  bool nullable = true;
  // Optional flag: columns marked unique get a distinct/total ratio in the
  // fidelity report. Not part of any score.
  bool unique = false;

  bool operator==(const ColumnSpec&) const = default;
};

/// Ordered list of column specs with unique names, in source-file order.
class Schema {
 public:
  Schema() = default;
  explicit Schema(std::vector<ColumnSpec> columns);

  std::size_t size() const { return columns_.size(); }
  bool empty() const { return columns_.empty(); }
  const ColumnSpec& at(std::size_t i) const { return columns_.at(i); }
  const std::vector<ColumnSpec>& columns() const { return columns_; }

  std::optional<std::size_t> find(std::string_view name) const;

  bool operator==(const Schema& other) const {
    return columns_ == other.columns_;
  }

 private:
  std::vector<ColumnSpec> columns_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// A cell is the raw value text; nullopt is a missing value.
using Cell = std::optional<std::string>;

/// Parses a complete, finite real number; returns nullopt otherwise.
std::optional<double> parse_finite_double(std::string_view text);

/// Column-major immutable table. Every non-null cell conforms to its
/// column's kind (Continuous cells parse as finite reals).
class Table {
 public:
  Table() = default;

  /// Validates column count/lengths, kind conformance and nullability.
  static Table from_columns(Schema schema, std::vector<std::vector<Cell>> columns);

  /// Convenience for row-major construction (tests, small fixtures).
  static Table from_rows(Schema schema, const std::vector<std::vector<Cell>>& rows);

  const Schema& schema() const { return schema_; }
  std::size_t row_count() const { return rows_; }
  std::size_t column_count() const { return schema_.size(); }

  const std::vector<Cell>& column(std::size_t i) const { return columns_.at(i); }
  const std::vector<Cell>& column(std::string_view name) const;
  std::size_t column_index(std::string_view name) const;

  /// Non-null values of a Continuous column, parsed.
  std::vector<double> numeric_values(std::size_t i) const;
  /// Non-null values of any column as strings.
  std::vector<std::string> string_values(std::size_t i) const;

  /// New table holding the given rows, in the given order.
  Table take_rows(const std::vector<std::size_t>& row_indices) const;

 private:
  Table(Schema schema, std::vector<std::vector<Cell>> columns, std::size_t rows)
      : schema_(std::move(schema)), columns_(std::move(columns)), rows_(rows) {}

  Schema schema_;
  std::vector<std::vector<Cell>> columns_;
  std::size_t rows_ = 0;
};

/// Deterministic seeded shuffle-split. The first part holds
/// round-half-up(fraction * row_count) rows; parts are disjoint and together
/// cover the table. Throws EmptyTable on a zero-row table.
std::pair<Table, Table> split_rows(const Table& t, double fraction,
                                   std::uint64_t seed);

/// Keeps the first occurrence of each key tuple, preserving row order.
/// Null key cells compare equal to each other and unequal to any value.
Table dedup_rows(const Table& t, const std::vector<std::string>& key_columns);

}  // namespace syneval

#endif  // SYNEVAL_TABLE_HPP_
