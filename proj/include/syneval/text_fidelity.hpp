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

#ifndef SYNEVAL_TEXT_FIDELITY_HPP_
#define SYNEVAL_TEXT_FIDELITY_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "syneval/error.hpp"

namespace syneval {

using WordSet = std::unordered_set<std::string>;

/// Opinion word lists; disjoint, lowercase, single tokens.
struct SentimentLexicon {
  WordSet positive;
  WordSet negative;

  /// Bundled default lexicon.
  static const SentimentLexicon& builtin();
  /// One word per line under "#positive" / "#negative" section headers.
  static SentimentLexicon from_file(const std::filesystem::path& path);
};

/// Bundled default English stopword list.
const WordSet& builtin_stopwords();
/// One word per line; blank lines and '#' comments ignored.
WordSet stopwords_from_file(const std::filesystem::path& path);

enum class Sentiment { Positive, Neutral, Negative };
std::string_view sentiment_name(Sentiment s);

/// Lowercases and splits on runs of non-alphanumeric bytes.
std::vector<std::string> tokenize(std::string_view text);

/// Positive when positive hits outnumber negative hits, Negative for the
/// reverse, Neutral on a tie (including no hits).
Sentiment sentiment_classify(std::string_view text, const SentimentLexicon& lex);

struct SentimentShares {
  double positive = 0.0;
  double neutral = 0.0;
  double negative = 0.0;
};

SentimentShares sentiment_distribution(const std::vector<std::string>& texts,
                                       const SentimentLexicon& lex);

struct WordCount {
  std::string word;
  std::uint64_t count = 0;

  bool operator==(const WordCount&) const = default;
};

/// Top k tokens by (count desc, word asc), excluding stopwords and
/// pure-numeric tokens. Returns fewer than k when the vocabulary is smaller.
std::vector<WordCount> top_keywords(const std::vector<std::string>& texts,
                                    std::size_t k, const WordSet& stopwords);

/// As top_keywords, restricted to lexicon words; stopwords do not apply.
std::vector<WordCount> top_sentiment_words(const std::vector<std::string>& texts,
                                           std::size_t k,
                                           const SentimentLexicon& lex);

/// Mean token count per text.
double average_length(const std::vector<std::string>& texts);

struct TextSideStats {
  SentimentShares sentiment;
  std::string dominant_sentiment;
  double dominant_share = 0.0;
  std::vector<WordCount> top_keywords;
  std::vector<WordCount> top_sentiment_words;
  double average_length_words = 0.0;
};

struct TextReport {
  TextSideStats real;
  TextSideStats synthetic;
  bool dominant_match = false;
  std::size_t keyword_overlap = 0;         // |top3_real ∩ top3_syn|
  std::size_t sentiment_word_overlap = 0;  // same, over sentiment words
  std::optional<double> length_ratio;      // syn/real; absent when real is 0
};

/// All four text metrics on both corpora plus the derived comparisons.
TextReport text_fidelity(const std::vector<std::string>& real_texts,
                         const std::vector<std::string>& syn_texts,
                         const SentimentLexicon& lex, const WordSet& stopwords);

}  // namespace syneval

#endif  // SYNEVAL_TEXT_FIDELITY_HPP_
