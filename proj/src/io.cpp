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

#include "syneval/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"

namespace syneval {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

// Header row plus raw cells; shared by load_table and infer_schema.
struct RawTable {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> columns;  // column-major, aligned to header
  std::size_t rows = 0;
};

RawTable raw_from_csv(const std::string& content) {
  auto records = parse_csv(content);
  if (records.empty()) fail(ErrorCode::ParseError, "missing CSV header row");
  RawTable raw;
  raw.header = records.front();
  raw.columns.resize(raw.header.size());
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != raw.header.size()) {
      fail(ErrorCode::ParseError,
           "row " + std::to_string(r) + " has " + std::to_string(rec.size()) +
               " fields, expected " + std::to_string(raw.header.size()));
    }
    for (std::size_t c = 0; c < rec.size(); ++c) {
      // Empty cell means null.
      raw.columns[c].push_back(rec[c].empty() ? Cell{} : Cell{rec[c]});
    }
  }
  raw.rows = records.size() - 1;
  return raw;
}

std::string json_scalar_to_text(const json& v, std::size_t row,
                                const std::string& key) {
  switch (v.type()) {
    case json::value_t::string:
      return v.get<std::string>();
    case json::value_t::boolean:
      return v.get<bool>() ? "true" : "false";
    case json::value_t::number_integer:
    case json::value_t::number_unsigned:
    case json::value_t::number_float:
      return v.dump();
    default:
      fail(ErrorCode::ParseError, "row " + std::to_string(row) + " key '" +
                                      key + "' holds a non-scalar value");
  }
}

RawTable raw_from_jsonl(const std::string& content) {
  RawTable raw;
  std::istringstream in(content);
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      fail(ErrorCode::ParseError,
           "row " + std::to_string(line_no) + ": " + e.what());
    }
    if (!obj.is_object()) {
      fail(ErrorCode::ParseError,
           "row " + std::to_string(line_no) + " is not a JSON object");
    }
    if (!have_header) {
      for (auto& [key, _] : obj.items()) raw.header.push_back(key);
      std::sort(raw.header.begin(), raw.header.end());
      raw.columns.resize(raw.header.size());
      have_header = true;
    }
    if (obj.size() != raw.header.size()) {
      fail(ErrorCode::ParseError,
           "row " + std::to_string(line_no) + " keys differ from first row");
    }
    for (std::size_t c = 0; c < raw.header.size(); ++c) {
      auto it = obj.find(raw.header[c]);
      if (it == obj.end()) {
        fail(ErrorCode::ParseError, "row " + std::to_string(line_no) +
                                        " is missing key '" + raw.header[c] + "'");
      }
      raw.columns[c].push_back(
          it->is_null() ? Cell{}
                        : Cell{json_scalar_to_text(*it, line_no, raw.header[c])});
    }
    ++raw.rows;
  }
  if (!have_header) fail(ErrorCode::ParseError, "empty JSON-lines file");
  return raw;
}

RawTable load_raw(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    fail(ErrorCode::Io, "file not found: '" + path.string() + "'");
  }
  const std::string ext = path.extension().string();
  const std::string content = read_file(path);
  if (ext == ".csv") return raw_from_csv(content);
  if (ext == ".jsonl") return raw_from_jsonl(content);
  fail(ErrorCode::Io, "unsupported data file extension '" + ext +
                          "' (expected .csv or .jsonl)");
}

Schema infer_from_raw(const RawTable& raw) {
  std::vector<ColumnSpec> specs;
  specs.reserve(raw.header.size());
  const double discrete_cap =
      std::max(20.0, 0.05 * static_cast<double>(raw.rows));
  for (std::size_t c = 0; c < raw.header.size(); ++c) {
    std::unordered_set<std::string> distinct;
    bool all_numeric = true;
    bool saw_null = false;
    for (const Cell& cell : raw.columns[c]) {
      if (!cell.has_value()) {
        saw_null = true;
        continue;
      }
      distinct.insert(*cell);
      if (all_numeric && !parse_finite_double(*cell).has_value()) {
        all_numeric = false;
      }
    }
    ColumnKind kind;
    if (static_cast<double>(distinct.size()) <= discrete_cap) {
      kind = ColumnKind::Discrete;
    } else if (all_numeric) {
      kind = ColumnKind::Continuous;
    } else {
      kind = ColumnKind::Text;
    }
    specs.push_back({raw.header[c], kind, saw_null, false});
  }
  return Schema(std::move(specs));
}

}  // namespace

std::vector<std::vector<std::string>> parse_csv(const std::string& content) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  std::size_t line = 1;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(record));
    record.clear();
  };

  for (std::size_t i = 0; i < content.size(); ++i) {
    const char ch = content[i];
    if (in_quotes) {
      if (ch == '"') {
        if (i + 1 < content.size() && content[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (ch == '\n') ++line;
        field += ch;
      }
      continue;
    }
    switch (ch) {
      case '"':
        if (!field.empty() || field_was_quoted) {
          fail(ErrorCode::ParseError,
               "unexpected quote inside unquoted field at line " +
                   std::to_string(line));
        }
        in_quotes = true;
        field_was_quoted = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        if (i + 1 < content.size() && content[i + 1] == '\n') break;  // CRLF
        fail(ErrorCode::ParseError,
             "bare carriage return at line " + std::to_string(line));
      case '\n':
        end_record();
        ++line;
        break;
      default:
        field += ch;
    }
  }
  if (in_quotes) {
    fail(ErrorCode::ParseError, "unterminated quoted field at end of file");
  }
  // Final record without a trailing newline.
  if (!field.empty() || field_was_quoted || !record.empty()) end_record();
  return records;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

Table load_table(const std::filesystem::path& path,
                 const std::optional<Schema>& schema) {
  RawTable raw = load_raw(path);
  Schema resolved = schema.has_value() ? *schema : infer_from_raw(raw);
  if (schema.has_value()) {
    if (resolved.size() != raw.header.size()) {
      fail(ErrorCode::SchemaMismatch,
           "file has " + std::to_string(raw.header.size()) +
               " columns, schema has " + std::to_string(resolved.size()));
    }
    for (std::size_t c = 0; c < raw.header.size(); ++c) {
      if (resolved.at(c).name != raw.header[c]) {
        fail(ErrorCode::SchemaMismatch,
             "column " + std::to_string(c + 1) + " is '" + raw.header[c] +
                 "' in the file but '" + resolved.at(c).name + "' in the schema");
      }
    }
  }
  return Table::from_columns(std::move(resolved), std::move(raw.columns));
}

Schema infer_schema(const std::filesystem::path& path) {
  return infer_from_raw(load_raw(path));
}

void write_table(const Table& t, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::Io, "cannot write '" + path.string() + "'");
  const std::string ext = path.extension().string();
  if (ext == ".jsonl") {
    for (std::size_t r = 0; r < t.row_count(); ++r) {
      json obj;
      for (std::size_t c = 0; c < t.column_count(); ++c) {
        const Cell& cell = t.column(c)[r];
        obj[t.schema().at(c).name] = cell.has_value() ? json(*cell) : json();
      }
      out << obj.dump() << '\n';
    }
    return;
  }
  for (std::size_t c = 0; c < t.column_count(); ++c) {
    if (c) out << ',';
    out << csv_escape(t.schema().at(c).name);
  }
  out << '\n';
  for (std::size_t r = 0; r < t.row_count(); ++r) {
    for (std::size_t c = 0; c < t.column_count(); ++c) {
      if (c) out << ',';
      const Cell& cell = t.column(c)[r];
      if (cell.has_value()) out << csv_escape(*cell);
    }
    out << '\n';
  }
}

Schema schema_from_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, std::string("schema JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("columns") || !doc["columns"].is_array()) {
    fail(ErrorCode::ParseError, "schema JSON must be {\"columns\":[...]}");
  }
  std::vector<ColumnSpec> specs;
  for (const auto& col : doc["columns"]) {
    if (!col.is_object() || !col.contains("name") || !col.contains("kind")) {
      fail(ErrorCode::ParseError, "schema column needs \"name\" and \"kind\"");
    }
    ColumnSpec spec;
    spec.name = col["name"].get<std::string>();
    auto kind = column_kind_from_name(col["kind"].get<std::string>());
    if (!kind.has_value()) {
      fail(ErrorCode::ParseError,
           "unknown column kind '" + col["kind"].get<std::string>() + "'");
    }
    spec.kind = *kind;
    spec.nullable = col.value("nullable", true);
    spec.unique = col.value("unique", false);
    specs.push_back(std::move(spec));
  }
  return Schema(std::move(specs));
}

std::string schema_to_json_text(const Schema& schema) {
  json cols = json::array();
  for (const auto& spec : schema.columns()) {
    json col;
    col["name"] = spec.name;
    col["kind"] = std::string(column_kind_name(spec.kind));
    col["nullable"] = spec.nullable;
    if (spec.unique) col["unique"] = true;
    cols.push_back(std::move(col));
  }
  json doc;
  doc["columns"] = std::move(cols);
  return doc.dump(2) + "\n";
}

Schema load_schema(const std::filesystem::path& path) {
  return schema_from_json_text(read_file(path));
}

}  // namespace syneval
