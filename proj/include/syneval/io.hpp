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

#ifndef SYNEVAL_IO_HPP_
#define SYNEVAL_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "syneval/table.hpp"

namespace syneval {

/// Loads a CSV (header required) or JSON-lines file, chosen by extension
/// (.csv / .jsonl). With a schema, file columns must match the schema's
/// names and order; without one, the schema is inferred (see infer_schema).
/// Empty CSV cells and JSON nulls load as null.
Table load_table(const std::filesystem::path& path,
                 const std::optional<Schema>& schema = std::nullopt);

/// Column kind inference. A column is Discrete when its distinct non-null
/// value count is at most max(20, 5% of rows); else Continuous when every
/// non-null value parses as a number; else Text. Identifier is never
/// inferred. A column is nullable iff a null was observed.
Schema infer_schema(const std::filesystem::path& path);

/// Writes a table by extension: .csv with RFC-4180 quoting (null -> empty
/// cell), .jsonl with one object per row (null -> JSON null).
void write_table(const Table& t, const std::filesystem::path& path);

/// Schema file: JSON object {"columns":[{"name","kind","nullable"}]}.
/// An optional per-column "unique" flag is also recognized.
Schema load_schema(const std::filesystem::path& path);
Schema schema_from_json_text(const std::string& text);
std::string schema_to_json_text(const Schema& schema);

// RFC-4180 helpers, exposed for tests.
std::vector<std::vector<std::string>> parse_csv(const std::string& content);
std::string csv_escape(const std::string& field);

}  // namespace syneval

#endif  // SYNEVAL_IO_HPP_
