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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "syneval/rng.hpp"
#include "syneval/table.hpp"

using namespace syneval;

namespace {

Schema two_col_schema() {
  return Schema({{"a", ColumnKind::Continuous, true, false},
                 {"b", ColumnKind::Discrete, true, false}});
}

Table small_table(const std::vector<std::pair<const char*, const char*>>& rows) {
  std::vector<std::vector<Cell>> cells;
  for (const auto& [a, b] : rows) {
    cells.push_back({a ? Cell{a} : Cell{}, b ? Cell{b} : Cell{}});
  }
  return Table::from_rows(two_col_schema(), cells);
}

std::multiset<std::string> row_multiset(const Table& t) {
  std::multiset<std::string> out;
  for (std::size_t r = 0; r < t.row_count(); ++r) {
    std::string key;
    for (std::size_t c = 0; c < t.column_count(); ++c) {
      const Cell& cell = t.column(c)[r];
      key += cell.has_value() ? "v" + std::to_string(cell->size()) + *cell : "n";
      key += "|";
    }
    out.insert(key);
  }
  return out;
}

Table random_table(Rng& rng, std::size_t rows) {
  Schema schema({{"x", ColumnKind::Continuous, true, false},
                 {"y", ColumnKind::Discrete, true, false},
                 {"z", ColumnKind::Text, true, false}});
  std::vector<std::vector<Cell>> cells;
  for (std::size_t r = 0; r < rows; ++r) {
    Cell x = rng.chance(0.1) ? Cell{} : Cell{std::to_string(rng.range(-50, 50))};
    Cell y = rng.chance(0.1) ? Cell{} : Cell{std::string(1, static_cast<char>('A' + rng.range(0, 4)))};
    Cell z = Cell{"w" + std::to_string(rng.range(0, 9))};
    cells.push_back({x, y, z});
  }
  return Table::from_rows(std::move(schema), cells);
}

}  // namespace

TEST_CASE("schema rejects duplicate names") {
  CHECK_THROWS_AS(Schema({{"a", ColumnKind::Text, true, false},
                          {"a", ColumnKind::Text, true, false}}),
                  Error);
}

TEST_CASE("table validates kinds and lengths") {
  CHECK_THROWS_AS(
      Table::from_rows(two_col_schema(), {{Cell{"not-a-number"}, Cell{"x"}}}),
      Error);
  Schema strict({{"a", ColumnKind::Continuous, false, false}});
  CHECK_THROWS_AS(Table::from_rows(strict, {{Cell{}}}), Error);
  // Ragged columns.
  CHECK_THROWS_AS(Table::from_columns(two_col_schema(),
                                      {{Cell{"1"}}, {Cell{"x"}, Cell{"y"}}}),
                  Error);
}

TEST_CASE("numeric and string value extraction skips nulls") {
  Table t = small_table({{"1", "x"}, {nullptr, "y"}, {"2.5", nullptr}});
  CHECK(t.numeric_values(0) == std::vector<double>{1.0, 2.5});
  CHECK(t.string_values(1) == std::vector<std::string>{"x", "y"});
}

TEST_CASE("split_rows sizes and determinism") {
  std::vector<std::pair<const char*, const char*>> rows;
  for (int i = 0; i < 10; ++i) rows.push_back({"1", "x"});
  Table t = small_table(rows);

  auto [first, second] = split_rows(t, 0.5, 42);
  CHECK(first.row_count() == 5);
  CHECK(second.row_count() == 5);

  auto [first2, second2] = split_rows(t, 0.5, 42);
  CHECK(row_multiset(first) == row_multiset(first2));
  CHECK(row_multiset(second) == row_multiset(second2));
}

TEST_CASE("split_rows rounds half up") {
  Table t = small_table({{"1", "x"}, {"2", "y"}, {"3", "z"}});
  auto [first, second] = split_rows(t, 0.5, 7);
  CHECK(first.row_count() == 2);
  CHECK(second.row_count() == 1);
}

TEST_CASE("split_rows rejects empty tables and bad fractions") {
  Table empty = small_table({});
  CHECK_THROWS_AS(split_rows(empty, 0.5, 1), Error);
  Table t = small_table({{"1", "x"}, {"2", "y"}});
  CHECK_THROWS_AS(split_rows(t, 0.0, 1), Error);
  CHECK_THROWS_AS(split_rows(t, 1.0, 1), Error);
}

TEST_CASE("split_rows parts partition the table for random inputs") {
  Rng rng(2024);
  for (int iter = 0; iter < 50; ++iter) {
    std::size_t n = 1 + static_cast<std::size_t>(rng.below(40));
    Table t = random_table(rng, n);
    double fraction = 0.05 + 0.9 * rng.unit();
    std::uint64_t seed = rng.next();
    auto [a, b] = split_rows(t, fraction, seed);
    CHECK(a.row_count() + b.row_count() == n);
    auto combined = row_multiset(a);
    for (const auto& key : row_multiset(b)) combined.insert(key);
    CHECK(combined == row_multiset(t));
  }
}

TEST_CASE("dedup keeps first occurrence in order") {
  Schema schema({{"title", ColumnKind::Text, true, false}});
  Table t = Table::from_rows(schema, {{Cell{"A"}}, {Cell{"B"}}, {Cell{"A"}}});
  Table d = dedup_rows(t, {"title"});
  REQUIRE(d.row_count() == 2);
  CHECK(d.column(0)[0] == Cell{"A"});
  CHECK(d.column(0)[1] == Cell{"B"});
}

TEST_CASE("dedup on an all-unique table is the identity") {
  Table t = small_table({{"1", "x"}, {"2", "y"}, {"3", "z"}});
  Table d = dedup_rows(t, {"a", "b"});
  CHECK(row_multiset(d) == row_multiset(t));
}

TEST_CASE("dedup unknown key column") {
  Table t = small_table({{"1", "x"}});
  CHECK_THROWS_AS(dedup_rows(t, {"missing"}), Error);
}

TEST_CASE("two-column dedup matches pairwise comparison oracle") {
  Rng rng(99);
  for (int iter = 0; iter < 30; ++iter) {
    std::size_t n = 1 + static_cast<std::size_t>(rng.below(60));
    std::vector<std::pair<const char*, const char*>> spec_rows;
    std::vector<std::vector<Cell>> cells;
    static const char* avals[] = {"1", "2", "3"};
    static const char* bvals[] = {"x", "y"};
    for (std::size_t r = 0; r < n; ++r) {
      Cell a = rng.chance(0.15) ? Cell{} : Cell{avals[rng.below(3)]};
      Cell b = rng.chance(0.15) ? Cell{} : Cell{bvals[rng.below(2)]};
      cells.push_back({a, b});
    }
    Table t = Table::from_rows(two_col_schema(), cells);
    Table d = dedup_rows(t, {"a", "b"});

    // Oracle: O(n^2) scan keeping rows with no equal earlier key pair.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i) {
      bool dup = false;
      for (std::size_t j = 0; j < i && !dup; ++j) {
        dup = cells[j][0] == cells[i][0] && cells[j][1] == cells[i][1];
      }
      if (!dup) keep.push_back(i);
    }
    REQUIRE(d.row_count() == keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) {
      CHECK(d.column(0)[k] == cells[keep[k]][0]);
      CHECK(d.column(1)[k] == cells[keep[k]][1]);
    }
  }
}

TEST_CASE("parse_finite_double accepts only complete finite numbers") {
  CHECK(parse_finite_double("1.5") == 1.5);
  CHECK(parse_finite_double("-2e3") == -2000.0);
  CHECK_FALSE(parse_finite_double("").has_value());
  CHECK_FALSE(parse_finite_double("1.5x").has_value());
  CHECK_FALSE(parse_finite_double("inf").has_value());
  CHECK_FALSE(parse_finite_double("nan").has_value());
  CHECK_FALSE(parse_finite_double(" 1").has_value());
}
