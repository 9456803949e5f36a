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

#include "syneval/report.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>

namespace syneval {

using nlohmann::json;

namespace {

std::uint64_t fnv1a64_update(std::uint64_t h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string to_hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

InputFingerprint fingerprint_table(const Table& t) {
  InputFingerprint fp;
  fp.rows = t.row_count();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const auto& spec : t.schema().columns()) {
    fp.columns.push_back(spec.name);
    h = fnv1a64_update(h, spec.name);
    h = fnv1a64_update(h, "\x1f");
  }
  for (std::size_t r = 0; r < t.row_count(); ++r) {
    for (std::size_t c = 0; c < t.column_count(); ++c) {
      const Cell& cell = t.column(c)[r];
      if (cell.has_value()) {
        h = fnv1a64_update(h, "v");
        h = fnv1a64_update(h, *cell);
      } else {
        h = fnv1a64_update(h, "n");
      }
      h = fnv1a64_update(h, "\x1e");
    }
  }
  fp.content_hash = "fnv1a64:" + to_hex(h);
  return fp;
}

std::string now_iso8601_utc() {
  std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

SynEvalReport assemble_report(ReportParts parts) {
  if (!parts.fidelity.has_value() && !parts.text_fidelity.has_value() &&
      parts.utility.empty() && !parts.privacy.has_value()) {
    fail(ErrorCode::NoResults, "no axis results to report");
  }
  SynEvalReport report;
  report.generated_at =
      parts.timestamp.empty() ? now_iso8601_utc() : parts.timestamp;
  report.seed = parts.seed;
  report.inputs = std::move(parts.inputs);
  report.fidelity = std::move(parts.fidelity);
  report.text_fidelity = std::move(parts.text_fidelity);
  report.utility = std::move(parts.utility);
  report.privacy = std::move(parts.privacy);
  report.warnings = std::move(parts.warnings);

  std::optional<double> tstr, trtr;
  for (const auto& u : report.utility) {
    (u.mode == UtilityMode::Tstr ? tstr : trtr) = u.accuracy;
  }
  if (tstr.has_value() && trtr.has_value()) {
    report.utility_accuracy_gap = *trtr - *tstr;
  }
  return report;
}

namespace {

json fidelity_to_json(const FidelityReport& f) {
  json by_column = json::object();
  for (const auto& [name, score] : f.integrity_by_column) by_column[name] = score;
  json shapes = json::object();
  for (const auto& [name, shape] : f.shapes_by_column) {
    shapes[name] = {{"method", std::string(shape_method_name(shape.method))},
                    {"score", shape.score}};
  }
  json uniqueness = json::object();
  for (const auto& [name, ratio] : f.uniqueness_by_column) {
    uniqueness[name] = {{"real", ratio.real}, {"synthetic", ratio.synthetic}};
  }
  return {{"sps", f.sps},
          {"integrity", f.integrity},
          {"integrity_by_column", by_column},
          {"column_shapes", f.column_shapes},
          {"shapes_by_column", shapes},
          {"uniqueness_by_column", uniqueness},
          {"only_in_real", f.only_in_real},
          {"only_in_synthetic", f.only_in_synthetic},
          {"warnings", f.warnings}};
}

FidelityReport fidelity_from_json(const json& doc) {
  FidelityReport f;
  f.sps = doc.at("sps").get<double>();
  f.integrity = doc.at("integrity").get<double>();
  for (const auto& [name, value] : doc.at("integrity_by_column").items()) {
    f.integrity_by_column[name] = value.get<double>();
  }
  f.column_shapes = doc.at("column_shapes").get<double>();
  for (const auto& [name, value] : doc.at("shapes_by_column").items()) {
    ColumnShape shape;
    shape.method = value.at("method").get<std::string>() == "ks_complement"
                       ? ShapeMethod::Ks
                       : ShapeMethod::Tvd;
    shape.score = value.at("score").get<double>();
    f.shapes_by_column[name] = shape;
  }
  if (doc.contains("uniqueness_by_column")) {
    for (const auto& [name, value] : doc.at("uniqueness_by_column").items()) {
      f.uniqueness_by_column[name] = {value.at("real").get<double>(),
                                      value.at("synthetic").get<double>()};
    }
  }
  f.only_in_real = doc.value("only_in_real", std::vector<std::string>{});
  f.only_in_synthetic = doc.value("only_in_synthetic", std::vector<std::string>{});
  f.warnings = doc.value("warnings", std::vector<std::string>{});
  return f;
}

json word_counts_to_json(const std::vector<WordCount>& words) {
  json arr = json::array();
  for (const auto& wc : words) {
    arr.push_back({{"word", wc.word}, {"count", wc.count}});
  }
  return arr;
}

std::vector<WordCount> word_counts_from_json(const json& arr) {
  std::vector<WordCount> out;
  for (const auto& item : arr) {
    out.push_back({item.at("word").get<std::string>(),
                   item.at("count").get<std::uint64_t>()});
  }
  return out;
}

json side_to_json(const TextSideStats& side) {
  return {{"sentiment_distribution",
           {{"positive", side.sentiment.positive},
            {"neutral", side.sentiment.neutral},
            {"negative", side.sentiment.negative}}},
          {"dominant_sentiment", side.dominant_sentiment},
          {"dominant_share", side.dominant_share},
          {"top_keywords", word_counts_to_json(side.top_keywords)},
          {"top_sentiment_words", word_counts_to_json(side.top_sentiment_words)},
          {"average_length_words", side.average_length_words}};
}

TextSideStats side_from_json(const json& doc) {
  TextSideStats side;
  const auto& dist = doc.at("sentiment_distribution");
  side.sentiment.positive = dist.at("positive").get<double>();
  side.sentiment.neutral = dist.at("neutral").get<double>();
  side.sentiment.negative = dist.at("negative").get<double>();
  side.dominant_sentiment = doc.at("dominant_sentiment").get<std::string>();
  side.dominant_share = doc.at("dominant_share").get<double>();
  side.top_keywords = word_counts_from_json(doc.at("top_keywords"));
  side.top_sentiment_words = word_counts_from_json(doc.at("top_sentiment_words"));
  side.average_length_words = doc.at("average_length_words").get<double>();
  return side;
}

json text_to_json(const TextReport& t) {
  return {{"real", side_to_json(t.real)},
          {"synthetic", side_to_json(t.synthetic)},
          {"dominant_match", t.dominant_match},
          {"keyword_overlap", t.keyword_overlap},
          {"sentiment_word_overlap", t.sentiment_word_overlap},
          {"length_ratio",
           t.length_ratio.has_value() ? json(*t.length_ratio) : json()}};
}

TextReport text_from_json(const json& doc) {
  TextReport t;
  t.real = side_from_json(doc.at("real"));
  t.synthetic = side_from_json(doc.at("synthetic"));
  t.dominant_match = doc.at("dominant_match").get<bool>();
  t.keyword_overlap = doc.at("keyword_overlap").get<std::size_t>();
  t.sentiment_word_overlap = doc.at("sentiment_word_overlap").get<std::size_t>();
  if (doc.contains("length_ratio") && !doc.at("length_ratio").is_null()) {
    t.length_ratio = doc.at("length_ratio").get<double>();
  }
  return t;
}

json utility_to_json(const UtilityReport& u) {
  return {{"mode", std::string(utility_mode_name(u.mode))},
          {"accuracy", u.accuracy},
          {"mae", u.mae},
          {"tolerance", u.tolerance},
          {"n_train", u.n_train},
          {"n_test", u.n_test}};
}

UtilityReport utility_from_json(const json& doc) {
  UtilityReport u;
  u.mode = doc.at("mode").get<std::string>() == "TSTR" ? UtilityMode::Tstr
                                                       : UtilityMode::Trtr;
  u.accuracy = doc.at("accuracy").get<double>();
  u.mae = doc.at("mae").get<double>();
  u.tolerance = doc.at("tolerance").get<double>();
  u.n_train = doc.at("n_train").get<std::size_t>();
  u.n_test = doc.at("n_test").get<std::size_t>();
  return u;
}

json privacy_to_json(const PrivacyReport& p) {
  return {{"success_rate", p.success_rate},
          {"n_train", p.n_train},
          {"n_test", p.n_test},
          {"confusion",
           {{"member_as_member", p.member_as_member},
            {"member_as_synthetic", p.member_as_synthetic},
            {"synthetic_as_synthetic", p.synthetic_as_synthetic},
            {"synthetic_as_member", p.synthetic_as_member}}},
          {"seed", p.seed},
          {"warnings", p.warnings}};
}

PrivacyReport privacy_from_json(const json& doc) {
  PrivacyReport p;
  p.success_rate = doc.at("success_rate").get<double>();
  p.n_train = doc.at("n_train").get<std::size_t>();
  p.n_test = doc.at("n_test").get<std::size_t>();
  const auto& confusion = doc.at("confusion");
  p.member_as_member = confusion.at("member_as_member").get<std::size_t>();
  p.member_as_synthetic = confusion.at("member_as_synthetic").get<std::size_t>();
  p.synthetic_as_synthetic =
      confusion.at("synthetic_as_synthetic").get<std::size_t>();
  p.synthetic_as_member = confusion.at("synthetic_as_member").get<std::size_t>();
  p.seed = doc.at("seed").get<std::uint64_t>();
  p.warnings = doc.value("warnings", std::vector<std::string>{});
  return p;
}

}  // namespace

json report_to_json(const SynEvalReport& report) {
  json inputs = json::object();
  for (const auto& [role, fp] : report.inputs) {
    inputs[role] = {{"rows", fp.rows},
                    {"columns", fp.columns},
                    {"content_hash", fp.content_hash}};
  }
  json doc;
  doc["schema_version"] = report.schema_version;
  doc["tool_version"] = report.tool_version;
  doc["generated_at"] = report.generated_at;
  doc["seed"] = report.seed;
  doc["inputs"] = std::move(inputs);
  doc["fidelity"] = report.fidelity.has_value()
                        ? fidelity_to_json(*report.fidelity)
                        : json();
  doc["text_fidelity"] = report.text_fidelity.has_value()
                             ? text_to_json(*report.text_fidelity)
                             : json();
  if (report.utility.empty()) {
    doc["utility"] = json();
  } else {
    json arr = json::array();
    for (const auto& u : report.utility) arr.push_back(utility_to_json(u));
    doc["utility"] = std::move(arr);
  }
  doc["utility_accuracy_gap"] = report.utility_accuracy_gap.has_value()
                                    ? json(*report.utility_accuracy_gap)
                                    : json();
  doc["privacy"] =
      report.privacy.has_value() ? privacy_to_json(*report.privacy) : json();
  doc["warnings"] = report.warnings;
  return doc;
}

SynEvalReport report_from_json(const json& doc) {
  SynEvalReport report;
  report.schema_version = doc.value("schema_version", std::string(kReportSchemaVersion));
  report.tool_version = doc.value("tool_version", std::string(kToolVersion));
  report.generated_at = doc.value("generated_at", "");
  report.seed = doc.value("seed", std::uint64_t{0});
  if (doc.contains("inputs") && doc.at("inputs").is_object()) {
    for (const auto& [role, fp] : doc.at("inputs").items()) {
      InputFingerprint parsed;
      parsed.rows = fp.at("rows").get<std::size_t>();
      parsed.columns = fp.at("columns").get<std::vector<std::string>>();
      parsed.content_hash = fp.at("content_hash").get<std::string>();
      report.inputs[role] = std::move(parsed);
    }
  }
  if (doc.contains("fidelity") && !doc.at("fidelity").is_null()) {
    report.fidelity = fidelity_from_json(doc.at("fidelity"));
  }
  if (doc.contains("text_fidelity") && !doc.at("text_fidelity").is_null()) {
    report.text_fidelity = text_from_json(doc.at("text_fidelity"));
  }
  if (doc.contains("utility") && doc.at("utility").is_array()) {
    for (const auto& u : doc.at("utility")) {
      report.utility.push_back(utility_from_json(u));
    }
  }
  if (doc.contains("utility_accuracy_gap") &&
      !doc.at("utility_accuracy_gap").is_null()) {
    report.utility_accuracy_gap = doc.at("utility_accuracy_gap").get<double>();
  }
  if (doc.contains("privacy") && !doc.at("privacy").is_null()) {
    report.privacy = privacy_from_json(doc.at("privacy"));
  }
  report.warnings = doc.value("warnings", std::vector<std::string>{});
  return report;
}

std::string format_fixed(double value, int decimals) {
  if (!std::isfinite(value)) return "n/a";
  double scale = 1.0;
  for (int i = 0; i < decimals; ++i) scale *= 10.0;
  const double sign = value < 0 ? -1.0 : 1.0;
  const double rounded = sign * std::floor(std::abs(value) * scale + 0.5) / scale;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, rounded);
  return buf;
}

std::string format_percent(double fraction) {
  if (!std::isfinite(fraction)) return "n/a";
  return format_fixed(fraction * 100.0, 2) + "%";
}

namespace {

std::string capitalized(std::string word) {
  if (!word.empty() && word[0] >= 'a' && word[0] <= 'z') {
    word[0] = static_cast<char>(word[0] - 'a' + 'A');
  }
  return word;
}

std::string word_list(const std::vector<WordCount>& words) {
  if (words.empty()) return "-";
  std::string out;
  for (const auto& wc : words) {
    if (!out.empty()) out += ", ";
    out += wc.word;
  }
  return out;
}

}  // namespace

std::string render_markdown(const SynEvalReport& report) {
  std::ostringstream md;
  md << "# SynEval Report\n\n";
  md << "- Generated: " << report.generated_at << "\n";
  md << "- Seed: " << report.seed << "\n";
  for (const auto& [role, fp] : report.inputs) {
    md << "- Input `" << role << "`: " << fp.rows << " rows, "
       << fp.columns.size() << " columns, " << fp.content_hash << "\n";
  }

  if (report.fidelity.has_value()) {
    const FidelityReport& f = *report.fidelity;
    md << "\n## Fidelity (non-text columns)\n\n";
    md << "| Metric | Synthetic |\n| --- | --- |\n";
    md << "| Structure Preserving Score | " << format_percent(f.sps) << " |\n";
    md << "| Data Integrity Score | " << format_percent(f.integrity) << " |\n";
    md << "| Column Shapes Score | " << format_percent(f.column_shapes)
       << " |\n";
    if (!f.shapes_by_column.empty()) {
      md << "\n| Column | Method | Shape | Integrity |\n| --- | --- | --- | --- |\n";
      for (const auto& [name, shape] : f.shapes_by_column) {
        md << "| " << name << " | "
           << (shape.method == ShapeMethod::Ks ? "KS" : "TVD") << " | "
           << format_percent(shape.score) << " | ";
        auto it = f.integrity_by_column.find(name);
        md << (it == f.integrity_by_column.end() ? "-"
                                                 : format_percent(it->second))
           << " |\n";
      }
    }
    if (!f.uniqueness_by_column.empty()) {
      md << "\n| Unique-flagged column | Real distinct ratio | Synthetic distinct ratio |\n"
         << "| --- | --- | --- |\n";
      for (const auto& [name, ratio] : f.uniqueness_by_column) {
        md << "| " << name << " | " << format_percent(ratio.real) << " | "
           << format_percent(ratio.synthetic) << " |\n";
      }
    }
  }

  if (report.text_fidelity.has_value()) {
    const TextReport& t = *report.text_fidelity;
    md << "\n## Text Analysis\n\n";
    md << "| Metric | Synthetic | Real |\n| --- | --- | --- |\n";
    md << "| Sentiment Distribution | "
       << capitalized(t.synthetic.dominant_sentiment) << " ("
       << format_percent(t.synthetic.dominant_share) << ") | "
       << capitalized(t.real.dominant_sentiment) << " ("
       << format_percent(t.real.dominant_share) << ") |\n";
    md << "| Top 3 Keywords | " << word_list(t.synthetic.top_keywords) << " | "
       << word_list(t.real.top_keywords) << " |\n";
    md << "| Top 3 Sentiment Words | " << word_list(t.synthetic.top_sentiment_words)
       << " | " << word_list(t.real.top_sentiment_words) << " |\n";
    md << "| Average length (words) | "
       << format_fixed(t.synthetic.average_length_words, 2) << " | "
       << format_fixed(t.real.average_length_words, 2) << " |\n";
    md << "\n- Dominant sentiment match: " << (t.dominant_match ? "yes" : "no")
       << "\n- Keyword overlap (top 3): " << t.keyword_overlap
       << "\n- Sentiment word overlap (top 3): " << t.sentiment_word_overlap
       << "\n- Length ratio (synthetic/real): "
       << (t.length_ratio.has_value() ? format_fixed(*t.length_ratio, 2)
                                      : std::string("n/a"))
       << "\n";
  }

  if (!report.utility.empty()) {
    md << "\n## Utility\n\n";
    md << "| Data Type | MAE | Accuracy |\n| --- | --- | --- |\n";
    for (const auto& u : report.utility) {
      md << "| " << (u.mode == UtilityMode::Tstr ? "Synthetic (TSTR)" : "Real (TRTR)")
         << " | " << format_fixed(u.mae, 4) << " | " << format_percent(u.accuracy)
         << " |\n";
    }
    if (report.utility_accuracy_gap.has_value()) {
      md << "\n- TRTR-TSTR accuracy gap: "
         << format_percent(*report.utility_accuracy_gap) << "\n";
    }
  }

  if (report.privacy.has_value()) {
    const PrivacyReport& p = *report.privacy;
    md << "\n## Privacy\n\n";
    md << "| MIA Model | Successful Rate |\n| --- | --- |\n";
    md << "| Trained on synthetic | " << format_percent(p.success_rate) << " |\n";
    md << "\n- Test set: " << p.n_test << " rows (train " << p.n_train << ")\n";
    md << "- Confusion: member->member " << p.member_as_member
       << ", member->synthetic " << p.member_as_synthetic
       << ", synthetic->synthetic " << p.synthetic_as_synthetic
       << ", synthetic->member " << p.synthetic_as_member << "\n";
  }

  if (!report.warnings.empty()) {
    md << "\n## Warnings\n\n";
    for (const auto& w : report.warnings) md << "- " << w << "\n";
  }
  return md.str();
}

}  // namespace syneval
