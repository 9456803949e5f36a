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

#ifndef SYNEVAL_REPORT_HPP_
#define SYNEVAL_REPORT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "syneval/fidelity.hpp"
#include "syneval/privacy.hpp"
#include "syneval/table.hpp"
#include "syneval/text_fidelity.hpp"
#include "syneval/utility.hpp"

namespace syneval {

inline constexpr std::string_view kReportSchemaVersion = "syneval_report_v1";
inline constexpr std::string_view kToolVersion = "0.1.0";

struct InputFingerprint {
  std::size_t rows = 0;
  std::vector<std::string> columns;
  std::string content_hash;  // fnv1a64 over column names and cells

  bool operator==(const InputFingerprint&) const = default;
};

InputFingerprint fingerprint_table(const Table& t);

struct SynEvalReport {
  std::string schema_version{kReportSchemaVersion};
  std::string tool_version{kToolVersion};
  std::string generated_at;  // ISO-8601 UTC; pinned in deterministic mode
  std::uint64_t seed = 0;
  std::map<std::string, InputFingerprint> inputs;  // role -> fingerprint
  std::optional<FidelityReport> fidelity;
  std::optional<TextReport> text_fidelity;
  std::vector<UtilityReport> utility;
  std::optional<double> utility_accuracy_gap;  // TRTR accuracy - TSTR accuracy
  std::optional<PrivacyReport> privacy;
  std::vector<std::string> warnings;
};

struct ReportParts {
  std::uint64_t seed = 0;
  // Empty means "stamp with the current UTC time".
  std::string timestamp;
  std::map<std::string, InputFingerprint> inputs;
  std::optional<FidelityReport> fidelity;
  std::optional<TextReport> text_fidelity;
  std::vector<UtilityReport> utility;
  std::optional<PrivacyReport> privacy;
  std::vector<std::string> warnings;
};

/// Builds the versioned report; at least one axis must be present.
SynEvalReport assemble_report(ReportParts parts);

nlohmann::json report_to_json(const SynEvalReport& report);
/// Unknown fields are ignored; absent axes may be null or missing.
SynEvalReport report_from_json(const nlohmann::json& doc);

std::string render_markdown(const SynEvalReport& report);

/// "98.40%" — two decimals, half-up.
std::string format_percent(double fraction);
/// Fixed-point with half-up rounding, e.g. format_fixed(4.0/3.0, 4) == "1.3333".
std::string format_fixed(double value, int decimals);

std::string now_iso8601_utc();

}  // namespace syneval

#endif  // SYNEVAL_REPORT_HPP_
