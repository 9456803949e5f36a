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

#include "syneval/error.hpp"

namespace syneval {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "E_PARSE";
    case ErrorCode::SchemaMismatch: return "E_SCHEMA_MISMATCH";
    case ErrorCode::KindViolation: return "E_KIND_VIOLATION";
    case ErrorCode::EmptyTable: return "E_EMPTY_TABLE";
    case ErrorCode::UnknownColumn: return "E_UNKNOWN_COLUMN";
    case ErrorCode::KindMismatch: return "E_KIND_MISMATCH";
    case ErrorCode::EmptyRealColumn: return "E_EMPTY_REAL_COLUMN";
    case ErrorCode::NoScorableColumns: return "E_NO_SCORABLE_COLUMNS";
    case ErrorCode::EmptyInput: return "E_EMPTY_INPUT";
    case ErrorCode::EmptyVocabulary: return "E_EMPTY_VOCABULARY";
    case ErrorCode::DegenerateLabels: return "E_DEGENERATE_LABELS";
    case ErrorCode::DimensionMismatch: return "E_DIMENSION_MISMATCH";
    case ErrorCode::LengthMismatch: return "E_LENGTH_MISMATCH";
    case ErrorCode::FitError: return "E_FIT";
    case ErrorCode::NoResults: return "E_NO_RESULTS";
    case ErrorCode::InvalidArgument: return "E_INVALID_ARGUMENT";
    case ErrorCode::Config: return "E_CONFIG";
    case ErrorCode::Io: return "E_IO";
  }
  return "E_UNKNOWN";
}

}  // namespace syneval
