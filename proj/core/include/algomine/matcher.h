// Copyright 2026 The algomine Authors
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

#ifndef ALGOMINE_MATCHER_H_
#define ALGOMINE_MATCHER_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algomine/corpus.h"
#include "algomine/dictionary.h"

namespace algomine {

struct MatchConfig {
  bool case_fold = true;
  // '-' (and U+2010/U+2011) compares equal to a single space. Hyphens are
  // never deleted, so "k-nn" and "knn" stay distinct.
  bool hyphen_space_equiv = true;
  // Aliases of at most this many characters are "short".
  int short_alias_threshold = kDefaultShortAliasThreshold;
  // Short aliases only match when the surface has no lowercase letter.
  bool short_alias_requires_uppercase = true;
};

// One matched span. Offsets are code points into the original sentence.
struct RawMention {
  int sentence_index = 0;
  int start = 0;
  int end = 0;
  std::string surface;
  // The dictionary alias that matched. When several aliases collapse to the
  // same pattern (e.g. hyphen variants) this is the one equal to the
  // lowercased surface, else the smallest.
  std::string alias;
  // Canonical names owning the matched pattern, sorted.
  std::vector<std::string> candidates;
  // Candidates for which the matched pattern is a full (non-abbreviation)
  // name, sorted. Only these mentions vouch for an abbreviation.
  std::vector<std::string> full_name_of;
  // Pattern length <= short_alias_threshold.
  bool short_alias = false;

  friend bool operator==(const RawMention&, const RawMention&) = default;
};

// Text after matching normalization, with a map back to the original.
struct NormalizedText {
  std::u32string chars;
  std::vector<std::int32_t> origin;  // chars[k] came from original[origin[k]]
};

NormalizedText NormalizeForMatching(std::u32string_view original,
                                    const MatchConfig& config);

// Normalized, trimmed pattern key for an alias.
std::u32string PatternKey(std::string_view alias, const MatchConfig& config);

// Aho-Corasick automaton over the dictionary's normalized aliases with
// leftmost-longest, boundary-checked selection. Immutable; FindMentions is
// safe to call concurrently.
class Matcher {
 public:
  // Throws InputError for an empty dictionary.
  static Matcher Build(const AlgorithmDictionary& dictionary,
                       const MatchConfig& config = {});

  std::vector<RawMention> FindMentions(const Sentence& sentence) const;
  std::vector<RawMention> FindMentions(std::string_view text,
                                       int sentence_index = 0) const;

  // Distinct patterns after normalization (aliases equal under the config's
  // normalization share one pattern).
  std::size_t pattern_count() const { return patterns_.size(); }
  // Candidates for `alias`, empty when it is not a pattern.
  std::vector<std::string> CandidatesFor(std::string_view alias) const;
  const MatchConfig& config() const { return config_; }

 private:
  struct Pattern {
    std::u32string key;
    std::vector<std::string> aliases;  // dictionary aliases, sorted
    std::vector<std::string> candidates;
    std::vector<std::string> full_name_of;
  };
  struct Node {
    std::vector<std::pair<char32_t, std::int32_t>> next;  // sorted by char
    std::int32_t fail = 0;
    std::int32_t pattern = -1;
    std::int32_t output = -1;  // nearest suffix node carrying a pattern
    std::int32_t depth = 0;
  };

  std::int32_t Child(std::int32_t node, char32_t c) const;
  std::int32_t Step(std::int32_t node, char32_t c) const;
  int FindPattern(const std::u32string& key) const;

  MatchConfig config_;
  std::vector<Pattern> patterns_;
  std::vector<Node> nodes_;
};

// Brute-force reference scanner: every alias tested at every position, then
// the same selection rules. Output contract identical to
// Matcher::FindMentions; intended for verification.
std::vector<RawMention> OracleScan(const AlgorithmDictionary& dictionary,
                                   const MatchConfig& config,
                                   const Sentence& sentence);

}  // namespace algomine

#endif  // ALGOMINE_MATCHER_H_
