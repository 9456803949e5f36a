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

#include "syneval/table.hpp"

#include <charconv>
#include <cmath>
#include <unordered_set>

#include "syneval/rng.hpp"

namespace syneval {

std::string_view column_kind_name(ColumnKind kind) {
  switch (kind) {
    case ColumnKind::Continuous: return "continuous";
    case ColumnKind::Discrete: return "discrete";
    case ColumnKind::Text: return "text";
    case ColumnKind::Identifier: return "identifier";
  }
  return "unknown";
}

std::optional<ColumnKind> column_kind_from_name(std::string_view name) {
  if (name == "continuous") return ColumnKind::Continuous;
  if (name == "discrete") return ColumnKind::Discrete;
  if (name == "text") return ColumnKind::Text;
  if (name == "identifier") return ColumnKind::Identifier;
  return std::nullopt;
}

Schema::Schema(std::vector<ColumnSpec> columns) : columns_(std::move(columns)) {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    auto [it, inserted] = index_.emplace(columns_[i].name, i);
    if (!inserted) {
      fail(ErrorCode::SchemaMismatch,
           "duplicate column name '" + columns_[i].name + "'");
    }
  }
}

std::optional<std::size_t> Schema::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<double> parse_finite_double(std::string_view text) {
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

namespace {

void check_cell(const ColumnSpec& spec, const Cell& cell, std::size_t row) {
  if (!cell.has_value()) {
    if (!spec.nullable) {
      fail(ErrorCode::KindViolation,
           "null value in non-nullable column '" + spec.name + "' at row " +
               std::to_string(row + 1));
    }
    return;
  }
  if (spec.kind == ColumnKind::Continuous &&
      !parse_finite_double(*cell).has_value()) {
    fail(ErrorCode::KindViolation,
         "value '" + *cell + "' in column '" + spec.name + "' at row " +
             std::to_string(row + 1) + " is not a finite number");
  }
}

}  // namespace

Table Table::from_columns(Schema schema, std::vector<std::vector<Cell>> columns) {
  if (columns.size() != schema.size()) {
    fail(ErrorCode::SchemaMismatch,
         "expected " + std::to_string(schema.size()) + " columns, got " +
             std::to_string(columns.size()));
  }
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) {
      fail(ErrorCode::SchemaMismatch,
           "column '" + schema.at(c).name + "' has " +
               std::to_string(columns[c].size()) + " rows, expected " +
               std::to_string(rows));
    }
    for (std::size_t r = 0; r < rows; ++r) {
      check_cell(schema.at(c), columns[c][r], r);
    }
  }
  return Table(std::move(schema), std::move(columns), rows);
}

Table Table::from_rows(Schema schema, const std::vector<std::vector<Cell>>& rows) {
  std::vector<std::vector<Cell>> columns(schema.size());
  for (auto& col : columns) col.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != schema.size()) {
      fail(ErrorCode::ParseError,
           "row " + std::to_string(r + 1) + " has " +
               std::to_string(rows[r].size()) + " fields, expected " +
               std::to_string(schema.size()));
    }
    for (std::size_t c = 0; c < schema.size(); ++c) columns[c].push_back(rows[r][c]);
  }
  return from_columns(std::move(schema), std::move(columns));
}

const std::vector<Cell>& Table::column(std::string_view name) const {
  return columns_.at(column_index(name));
}

std::size_t Table::column_index(std::string_view name) const {
  auto i = schema_.find(name);
  if (!i.has_value()) {
    fail(ErrorCode::UnknownColumn, "no column named '" + std::string(name) + "'");
  }
  return *i;
}

std::vector<double> Table::numeric_values(std::size_t i) const {
  std::vector<double> out;
  out.reserve(rows_);
  for (const Cell& cell : columns_.at(i)) {
    if (!cell.has_value()) continue;
    auto value = parse_finite_double(*cell);
    if (!value.has_value()) {
      fail(ErrorCode::KindViolation, "non-numeric value '" + *cell +
                                         "' in column '" + schema_.at(i).name + "'");
    }
    out.push_back(*value);
  }
  return out;
}

std::vector<std::string> Table::string_values(std::size_t i) const {
  std::vector<std::string> out;
  out.reserve(rows_);
  for (const Cell& cell : columns_.at(i)) {
    if (cell.has_value()) out.push_back(*cell);
  }
  return out;
}

Table Table::take_rows(const std::vector<std::size_t>& row_indices) const {
  std::vector<std::vector<Cell>> columns(columns_.size());
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    columns[c].reserve(row_indices.size());
    for (std::size_t r : row_indices) columns[c].push_back(columns_.at(c).at(r));
  }
  return Table(schema_, std::move(columns), row_indices.size());
}

std::pair<Table, Table> split_rows(const Table& t, double fraction,
                                   std::uint64_t seed) {
  if (t.row_count() == 0) fail(ErrorCode::EmptyTable, "cannot split an empty table");
  if (!(fraction > 0.0 && fraction < 1.0)) {
    fail(ErrorCode::InvalidArgument, "split fraction must be in (0,1)");
  }
  Rng rng(seed);
  std::vector<std::size_t> order = rng.permutation(t.row_count());
  // Round half-up: 3 rows at 0.5 -> (2, 1).
  auto first_size = static_cast<std::size_t>(
      std::floor(fraction * static_cast<double>(t.row_count()) + 0.5));
  if (first_size > t.row_count()) first_size = t.row_count();
  std::vector<std::size_t> first(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(first_size));
  std::vector<std::size_t> second(order.begin() + static_cast<std::ptrdiff_t>(first_size), order.end());
  return {t.take_rows(first), t.take_rows(second)};
}

Table dedup_rows(const Table& t, const std::vector<std::string>& key_columns) {
  std::vector<std::size_t> key_idx;
  key_idx.reserve(key_columns.size());
  for (const auto& name : key_columns) key_idx.push_back(t.column_index(name));

  std::unordered_set<std::string> seen;
  std::vector<std::size_t> keep;
  keep.reserve(t.row_count());
  for (std::size_t r = 0; r < t.row_count(); ++r) {
    // Length-prefixed encoding so keys cannot collide across columns.
    std::string key;
    for (std::size_t c : key_idx) {
      const Cell& cell = t.column(c)[r];
      if (!cell.has_value()) {
        key += "n;";
      } else {
        key += "v" + std::to_string(cell->size()) + ":" + *cell + ";";
      }
    }
    if (seen.insert(std::move(key)).second) keep.push_back(r);
  }
  return t.take_rows(keep);
}

}  // namespace syneval
