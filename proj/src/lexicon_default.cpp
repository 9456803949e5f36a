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

// Bundled opinion lexicon and stopword list. Both are overridable from the
// CLI with --lexicon / --stopwords files.

#include "syneval/text_fidelity.hpp"

namespace syneval {

namespace {

constexpr const char* kPositiveWords[] = {
    "accessible", "accurate", "achievement", "adaptable", "admirable",
    "admire", "adorable", "adore", "advanced", "advantage", "advantageous",
    "affordable", "agile", "amazed", "amazing", "ambitious", "appealing",
    "appreciate", "appreciated", "appreciates", "appreciative", "attractive",
    "authentic", "awesome", "awesomely", "beautiful", "beautifully", "benefit",
    "beneficial", "best", "better", "bliss", "blissful", "breeze", "bright",
    "brilliant", "brilliantly", "calm", "capable", "charming", "cheap",
    "cheaper", "cheerful", "clean", "cleaner", "clear", "clearer", "clever",
    "comfortable", "comfy", "commend", "compact", "compatible", "competent",
    "complete", "comprehensive", "confident", "congratulations", "consistent",
    "convenient", "cool", "coolest", "courteous", "crisp", "customizable",
    "dazzling", "decent", "delight", "delighted", "delightful", "dependable",
    "desirable", "durable", "eager", "easier", "easiest", "easy", "effective",
    "efficient", "effortless", "effortlessly", "elegant", "enjoy", "enjoyable",
    "enjoyed", "enjoying", "enjoys", "enhanced", "enthusiastic", "excellent",
    "excellently", "exceptional", "excited", "excitement", "exciting",
    "extraordinary", "fabulous", "fancy", "fantastic", "fast", "faster",
    "fastest", "favorite", "fine", "flawless", "flawlessly", "flexible",
    "fluid", "fresh", "friendly", "fun", "functional", "generous", "genius",
    "gentle", "genuine", "glad", "gladly", "goddess", "good", "gorgeous",
    "graceful", "grateful", "great", "greatest", "handy", "happier",
    "happiest", "happily", "happiness", "happy", "helpful", "honest",
    "hooked", "ideal", "immaculate", "impeccable", "impress", "impressed",
    "impressive", "improved", "improvement", "incredible", "incredibly",
    "innovative", "inspired", "inspiring", "intuitive", "invaluable", "joy",
    "joyful", "keen", "kind", "laudable", "legendary", "light", "lightweight",
    "like", "likeable", "liked", "likes", "love", "loved", "lovely", "loves",
    "loving", "loyal", "lucid", "magical", "magnificent", "marvelous",
    "masterful", "masterpiece", "mature", "memorable", "modern", "neat",
    "nice", "nicely", "nicer", "nifty", "nimble", "optimal", "outstanding",
    "painless", "peaceful", "perfect", "perfection", "perfectly", "phenomenal",
    "pleasant", "pleased", "pleasing", "pleasure", "polished", "positive",
    "powerful", "practical", "praise", "precious", "precise", "premium",
    "pretty", "pristine", "productive", "professional", "proficient",
    "promising", "prompt", "protective", "proud", "quality", "quick",
    "quicker", "quiet", "reasonable", "recommend", "recommended", "refined",
    "refreshing", "reliable", "reliably", "remarkable", "responsive",
    "rewarding", "rich", "right", "robust", "safe", "satisfactory",
    "satisfied", "satisfying", "seamless", "seamlessly", "secure", "sharp",
    "shiny", "silky", "simple", "simpler", "simplest", "simplicity", "sleek",
    "slick", "smart", "smooth", "smoother", "smoothly", "snappy", "solid",
    "sophisticated", "spacious", "spectacular", "speedy", "splendid",
    "spotless", "stable", "steady", "stellar", "straightforward", "strong",
    "stunning", "stunningly", "sturdy", "stylish", "succeed", "success",
    "successful", "super", "superb", "superior", "supreme", "sure", "sweet",
    "terrific", "thank", "thankful", "thanks", "thorough", "thrilled",
    "thrilling", "tidy", "timeless", "top", "tremendous", "triumph",
    "trusted", "trustworthy", "unbeatable", "unmatched", "upgraded", "useful",
    "valuable", "versatile", "vibrant", "victory", "vivid", "warm", "welcome",
    "wonderful", "wonderfully", "works", "worth", "worthwhile", "worthy",
    "wow",
};

constexpr const char* kNegativeWords[] = {
    "abandoned", "abysmal", "afraid", "aggravating", "angry", "annoy",
    "annoyance", "annoyed", "annoying", "annoys", "appalling", "atrocious",
    "awful", "awfully", "awkward", "bad", "badly", "barely", "blame",
    "bland", "bloated", "boring", "bottleneck", "breaks", "broke", "broken",
    "buggy", "bugs", "bulky", "bummer", "cheated", "cheating", "clumsy",
    "complain", "complained", "complaining", "complaint", "complaints",
    "complicated", "concern", "concerned", "concerning", "confuse",
    "confused", "confusing", "corrupt", "corrupted", "crap", "crappy",
    "crash", "crashed", "crashes", "crashing", "cumbersome", "damage",
    "damaged", "dead", "deceptive", "defect", "defective", "defects",
    "deficient", "degraded", "delay", "delayed", "delays", "dent", "dented",
    "deteriorated", "difficult", "difficulty", "dirty", "disappoint",
    "disappointed", "disappointing", "disappointment", "disappoints",
    "disaster", "disastrous", "disconnect", "disconnected", "disconnects",
    "dishonest", "dislike", "disliked", "dislikes", "dismal", "distorted",
    "drain", "drained", "drains", "dreadful", "dull", "dumb", "error",
    "errors", "expensive", "fail", "failed", "failing", "fails", "failure",
    "failures", "fake", "fatal", "fault", "faulty", "fear", "flaw", "flawed",
    "flaws", "flicker", "flickering", "flimsy", "fragile", "fraud",
    "freeze", "freezes", "freezing", "froze", "frozen", "frustrated",
    "frustrating", "frustration", "garbage", "glitch", "glitches", "glitchy",
    "grainy", "gripe", "gross", "hang", "hangs", "harsh", "hate", "hated",
    "hates", "hideous", "horrendous", "horrible", "horribly", "hassle",
    "impossible", "inaccurate", "inadequate", "incompatible", "incompetent",
    "incomplete", "inconsistent", "inconvenient", "incorrect", "ineffective",
    "inefficient", "inferior", "infuriating", "insecure", "insufficient",
    "intermittent", "intrusive", "issue", "issues", "jam", "jammed", "junk",
    "lack", "lacking", "lacks", "lag", "laggy", "lags", "lame", "lemon",
    "lousy", "mad", "malfunction", "malfunctioned", "malfunctioning",
    "mediocre", "mess", "messy", "misaligned", "mislead", "misleading",
    "missing", "mistake", "mistakes", "nasty", "negative", "nightmare",
    "noise", "noisy", "nonsense", "obsolete", "offensive", "outdated",
    "overheat", "overheated", "overheating", "overheats", "overpriced",
    "pain", "painful", "pathetic", "poor", "poorly", "pricey", "problem",
    "problematic", "problems", "refund", "refunded", "refuse", "refused",
    "regret", "regretted", "reject", "rejected", "repetitive", "return",
    "returned", "returning", "ridiculous", "rip", "ripoff", "rough", "rude",
    "rust", "rusty", "sad", "sadly", "scam", "scratch", "scratched",
    "scratches", "shabby", "shame", "shoddy", "slow", "slower", "slowest",
    "slowly", "sluggish", "sorry", "stale", "stopped", "struggle",
    "struggled", "struggles", "struggling", "stuck", "stupid", "subpar",
    "suck", "sucked", "sucks", "suspicious", "terrible", "terribly",
    "trash", "trouble", "troublesome", "ugly", "unacceptable", "unbearable",
    "uncomfortable", "unfortunate", "unfortunately", "unhappy", "unhelpful",
    "uninstall", "uninstalled", "unintuitive", "unpleasant", "unreliable",
    "unresponsive", "unstable", "unusable", "upset", "useless", "vague",
    "waste", "wasted", "wasteful", "weak", "wear", "wobbly", "worse",
    "worst", "worthless", "wrong",
};

constexpr const char* kStopwords[] = {
    "a", "about", "above", "after", "again", "against", "all", "am", "an",
    "and", "any", "are", "aren", "as", "at", "be", "because", "been",
    "before", "being", "below", "between", "both", "but", "by", "can",
    "cannot", "could", "couldn", "did", "didn", "do", "does", "doesn",
    "doing", "don", "down", "during", "each", "few", "for", "from",
    "further", "had", "hadn", "has", "hasn", "have", "haven", "having",
    "he", "her", "here", "hers", "herself", "him", "himself", "his", "how",
    "i", "if", "in", "into", "is", "isn", "it", "its", "itself", "just",
    "ll", "m", "me", "mightn", "more", "most", "mustn", "my", "myself",
    "needn", "no", "nor", "not", "now", "o", "of", "off", "on", "once",
    "only", "or", "other", "our", "ours", "ourselves", "out", "over", "own",
    "re", "s", "same", "shan", "she", "should", "shouldn", "so", "some",
    "such", "t", "than", "that", "the", "their", "theirs", "them",
    "themselves", "then", "there", "these", "they", "this", "those",
    "through", "to", "too", "under", "until", "up", "ve", "very", "was",
    "wasn", "we", "were", "weren", "what", "when", "where", "which",
    "while", "who", "whom", "why", "will", "with", "won", "would",
    "wouldn", "y", "you", "your", "yours", "yourself", "yourselves",
};

}  // namespace

const SentimentLexicon& SentimentLexicon::builtin() {
  static const SentimentLexicon lex = [] {
    SentimentLexicon l;
    for (const char* w : kPositiveWords) l.positive.insert(w);
    for (const char* w : kNegativeWords) l.negative.insert(w);
    return l;
  }();
  return lex;
}

const WordSet& builtin_stopwords() {
  static const WordSet words = [] {
    WordSet s;
    for (const char* w : kStopwords) s.insert(w);
    return s;
  }();
  return words;
}

}  // namespace syneval
