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

#include "syneval/text_fidelity.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "syneval/error.hpp"

namespace syneval {

namespace {

bool is_token_char(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z');
}

char to_lower_ascii(unsigned char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a')
                                : static_cast<char>(c);
}

bool pure_numeric(const std::string& token) {
  return std::all_of(token.begin(), token.end(),
                     [](unsigned char c) { return c >= '0' && c <= '9'; });
}

std::vector<WordCount> top_counts(const std::map<std::string, std::uint64_t>& counts,
                                  std::size_t k) {
  std::vector<WordCount> entries;
  entries.reserve(counts.size());
  for (const auto& [word, count] : counts) entries.push_back({word, count});
  // Count desc, word asc; the map already yields words ascending, so a
  // stable sort on count alone preserves the lexicographic tie-break.
  std::stable_sort(entries.begin(), entries.end(),
                   [](const WordCount& a, const WordCount& b) {
                     return a.count > b.count;
                   });
  if (entries.size() > k) entries.resize(k);
  return entries;
}

std::string normalize_lexicon_word(const std::string& line, std::size_t line_no) {
  auto tokens = tokenize(line);
  if (tokens.size() != 1) {
    fail(ErrorCode::ParseError,
         "lexicon line " + std::to_string(line_no) +
             " must hold exactly one word: '" + line + "'");
  }
  return tokens.front();
}

}  // namespace

std::string_view sentiment_name(Sentiment s) {
  switch (s) {
    case Sentiment::Positive: return "positive";
    case Sentiment::Neutral: return "neutral";
    case Sentiment::Negative: return "negative";
  }
  return "unknown";
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char c : text) {
    if (is_token_char(c)) {
      current += to_lower_ascii(c);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

Sentiment sentiment_classify(std::string_view text, const SentimentLexicon& lex) {
  std::size_t positive = 0, negative = 0;
  for (const auto& token : tokenize(text)) {
    positive += lex.positive.count(token);
    negative += lex.negative.count(token);
  }
  if (positive > negative) return Sentiment::Positive;
  if (negative > positive) return Sentiment::Negative;
  return Sentiment::Neutral;
}

SentimentShares sentiment_distribution(const std::vector<std::string>& texts,
                                       const SentimentLexicon& lex) {
  if (texts.empty()) {
    fail(ErrorCode::EmptyInput, "sentiment_distribution needs at least one text");
  }
  std::size_t pos = 0, neu = 0, neg = 0;
  for (const auto& text : texts) {
    switch (sentiment_classify(text, lex)) {
      case Sentiment::Positive: ++pos; break;
      case Sentiment::Neutral: ++neu; break;
      case Sentiment::Negative: ++neg; break;
    }
  }
  const double total = static_cast<double>(texts.size());
  return {static_cast<double>(pos) / total, static_cast<double>(neu) / total,
          static_cast<double>(neg) / total};
}

std::vector<WordCount> top_keywords(const std::vector<std::string>& texts,
                                    std::size_t k, const WordSet& stopwords) {
  if (texts.empty()) fail(ErrorCode::EmptyInput, "top_keywords needs texts");
  if (k == 0) fail(ErrorCode::InvalidArgument, "k must be >= 1");
  std::map<std::string, std::uint64_t> counts;
  for (const auto& text : texts) {
    for (auto& token : tokenize(text)) {
      if (stopwords.count(token) || pure_numeric(token)) continue;
      counts[token] += 1;
    }
  }
  return top_counts(counts, k);
}

std::vector<WordCount> top_sentiment_words(const std::vector<std::string>& texts,
                                           std::size_t k,
                                           const SentimentLexicon& lex) {
  if (texts.empty()) fail(ErrorCode::EmptyInput, "top_sentiment_words needs texts");
  if (k == 0) fail(ErrorCode::InvalidArgument, "k must be >= 1");
  std::map<std::string, std::uint64_t> counts;
  for (const auto& text : texts) {
    for (auto& token : tokenize(text)) {
      if (lex.positive.count(token) || lex.negative.count(token)) {
        counts[token] += 1;
      }
    }
  }
  return top_counts(counts, k);
}

double average_length(const std::vector<std::string>& texts) {
  if (texts.empty()) fail(ErrorCode::EmptyInput, "average_length needs texts");
  std::size_t tokens = 0;
  for (const auto& text : texts) tokens += tokenize(text).size();
  return static_cast<double>(tokens) / static_cast<double>(texts.size());
}

namespace {

TextSideStats side_stats(const std::vector<std::string>& texts,
                         const SentimentLexicon& lex, const WordSet& stopwords) {
  TextSideStats stats;
  stats.sentiment = sentiment_distribution(texts, lex);
  // Dominant label; ties resolve positive > neutral > negative.
  stats.dominant_sentiment = "positive";
  stats.dominant_share = stats.sentiment.positive;
  if (stats.sentiment.neutral > stats.dominant_share) {
    stats.dominant_sentiment = "neutral";
    stats.dominant_share = stats.sentiment.neutral;
  }
  if (stats.sentiment.negative > stats.dominant_share) {
    stats.dominant_sentiment = "negative";
    stats.dominant_share = stats.sentiment.negative;
  }
  stats.top_keywords = top_keywords(texts, 3, stopwords);
  stats.top_sentiment_words = top_sentiment_words(texts, 3, lex);
  stats.average_length_words = average_length(texts);
  return stats;
}

std::size_t overlap_count(const std::vector<WordCount>& a,
                          const std::vector<WordCount>& b) {
  std::size_t overlap = 0;
  for (const auto& x : a) {
    for (const auto& y : b) {
      if (x.word == y.word) {
        ++overlap;
        break;
      }
    }
  }
  return overlap;
}

}  // namespace

TextReport text_fidelity(const std::vector<std::string>& real_texts,
                         const std::vector<std::string>& syn_texts,
                         const SentimentLexicon& lex, const WordSet& stopwords) {
  TextReport report;
  report.real = side_stats(real_texts, lex, stopwords);
  report.synthetic = side_stats(syn_texts, lex, stopwords);
  report.dominant_match =
      report.real.dominant_sentiment == report.synthetic.dominant_sentiment;
  report.keyword_overlap =
      overlap_count(report.real.top_keywords, report.synthetic.top_keywords);
  report.sentiment_word_overlap = overlap_count(
      report.real.top_sentiment_words, report.synthetic.top_sentiment_words);
  if (report.real.average_length_words > 0.0) {
    report.length_ratio =
        report.synthetic.average_length_words / report.real.average_length_words;
  }
  return report;
}

SentimentLexicon SentimentLexicon::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open lexicon '" + path.string() + "'");
  SentimentLexicon lex;
  WordSet* section = nullptr;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line == "#positive") {
        section = &lex.positive;
      } else if (line == "#negative") {
        section = &lex.negative;
      }
      continue;  // other '#' lines are comments
    }
    if (section == nullptr) {
      fail(ErrorCode::ParseError,
           "lexicon line " + std::to_string(line_no) +
               " appears before a #positive/#negative section");
    }
    section->insert(normalize_lexicon_word(line, line_no));
  }
  for (const auto& word : lex.positive) {
    if (lex.negative.count(word)) {
      fail(ErrorCode::ParseError,
           "word '" + word + "' appears in both lexicon sections");
    }
  }
  return lex;
}

WordSet stopwords_from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open stopword file '" + path.string() + "'");
  WordSet words;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    words.insert(normalize_lexicon_word(line, line_no));
  }
  return words;
}

}  // namespace syneval
