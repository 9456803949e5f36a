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

#include "toy_corpus.hpp"

#include <array>
#include <string>

#include "syneval/rng.hpp"

namespace syneval::testsupport {

namespace {

constexpr std::array<const char*, 4> kWordsRating1 = {"terrible", "awful",
                                                      "refund", "broken"};
constexpr std::array<const char*, 4> kWordsRating2 = {"bad", "poor",
                                                      "disappointed", "slow"};
constexpr std::array<const char*, 4> kWordsRating3 = {"okay", "average", "meh",
                                                      "alright"};
constexpr std::array<const char*, 4> kWordsRating4 = {"good", "nice", "solid",
                                                      "helpful"};
constexpr std::array<const char*, 4> kWordsRating5 = {"perfect", "amazing",
                                                      "excellent", "love"};
constexpr std::array<const char*, 10> kNouns = {
    "app", "game", "update", "screen", "battery",
    "version", "feature", "support", "account", "device"};
constexpr std::array<const char*, 8> kFiller = {"the", "it", "this", "with",
                                                "for", "and", "really", "very"};
constexpr std::array<const char*, 6> kJunk = {"zxq", "qqv", "wvxx",
                                              "kjh", "vbn", "plm"};

const std::array<const char*, 4>& rating_pool(int rating) {
  switch (rating) {
    case 1: return kWordsRating1;
    case 2: return kWordsRating2;
    case 3: return kWordsRating3;
    case 4: return kWordsRating4;
    default: return kWordsRating5;
  }
}

std::string padded(std::size_t n) {
  std::string s = std::to_string(n);
  while (s.size() < 7) s.insert(s.begin(), '0');
  return s;
}

int draw_rating(Rng& rng) {
  const double u = rng.unit();
  if (u < 0.10) return 1;
  if (u < 0.20) return 2;
  if (u < 0.35) return 3;
  if (u < 0.60) return 4;
  return 5;
}

std::string make_body(Rng& rng, int rating, bool junk) {
  std::string body;
  auto append = [&body](const char* w) {
    if (!body.empty()) body += ' ';
    body += w;
  };
  const std::size_t length = 6 + rng.below(25);
  if (junk) {
    for (std::size_t i = 0; i < length; ++i) append(kJunk[rng.below(kJunk.size())]);
    return body;
  }
  const auto& pool = rating_pool(rating);
  const std::size_t markers = 2 + rng.below(3);
  for (std::size_t i = 0; i < length; ++i) {
    if (rng.chance(0.4)) {
      append(kNouns[rng.below(kNouns.size())]);
    } else {
      append(kFiller[rng.below(kFiller.size())]);
    }
  }
  for (std::size_t i = 0; i < markers; ++i) append(pool[rng.below(pool.size())]);
  return body;
}

}  // namespace

Table toy_reviews(const ToyOptions& options) {
  Rng rng(options.seed);
  Schema schema({{"rating", ColumnKind::Discrete, false, false},
                 {"title", ColumnKind::Text, false, true},
                 {"text", ColumnKind::Text, false, false},
                 {"asin", ColumnKind::Identifier, false, false},
                 {"parent_asin", ColumnKind::Identifier, false, false},
                 {"user_id", ColumnKind::Identifier, false, false},
                 {"timestamp", ColumnKind::Continuous, false, false},
                 {"helpful_vote", ColumnKind::Continuous, false, false},
                 {"verified_purchase", ColumnKind::Discrete, false, false}});

  std::vector<std::vector<Cell>> rows;
  rows.reserve(options.rows);
  for (std::size_t r = 0; r < options.rows; ++r) {
    const int rating = draw_rating(rng);
    const bool junk = options.text_noise > 0.0 && rng.chance(options.text_noise);

    const std::size_t asin_num =
        options.asin_pool == 0 ? options.id_offset + r
                               : options.id_offset + rng.below(options.asin_pool);
    const std::size_t user_num =
        options.user_pool == 0 ? options.id_offset + r
                               : options.id_offset + rng.below(options.user_pool);

    std::string title = std::string(rating_pool(rating)[rng.below(4)]) + " " +
                        kNouns[rng.below(kNouns.size())];
    const std::size_t votes =
        options.zero_votes ? 0 : (rng.chance(0.4) ? 0 : rng.below(30));
    bool verified = rng.chance(0.8);
    if (options.invert_verified) verified = !verified;

    rows.push_back({Cell{std::to_string(rating)},
                    Cell{std::move(title)},
                    Cell{make_body(rng, rating, junk)},
                    Cell{"A" + padded(asin_num)},
                    Cell{"P" + padded(asin_num / 2)},
                    Cell{"U" + padded(user_num)},
                    Cell{std::to_string(1600000000 + rng.below(100000000))},
                    Cell{std::to_string(votes)},
                    Cell{verified ? "true" : "false"}});
  }
  return Table::from_rows(std::move(schema), rows);
}

Table copy_identifiers_from(const Table& synthetic, const Table& source,
                            std::size_t pool_size, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::size_t> pool(pool_size);
  for (auto& idx : pool) idx = rng.below(source.row_count());

  std::vector<std::vector<Cell>> rows;
  rows.reserve(synthetic.row_count());
  for (std::size_t r = 0; r < synthetic.row_count(); ++r) {
    std::vector<Cell> row;
    row.reserve(synthetic.column_count());
    const std::size_t src = pool[rng.below(pool.size())];
    for (std::size_t c = 0; c < synthetic.column_count(); ++c) {
      const std::string& name = synthetic.schema().at(c).name;
      if (name == "user_id" || name == "asin" || name == "parent_asin") {
        row.push_back(source.column(name)[src]);
      } else {
        row.push_back(synthetic.column(c)[r]);
      }
    }
    rows.push_back(std::move(row));
  }
  return Table::from_rows(synthetic.schema(), rows);
}

}  // namespace syneval::testsupport
