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

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "algomine/matcher.h"
#include "algomine/text.h"

// Reference scanner. Deliberately shares nothing with the automaton beyond
// the UTF-8 and character-class primitives: it re-derives normalization and
// tests every alias at every position.

namespace algomine {
namespace {

struct Folded {
  std::u32string chars;
  std::vector<std::size_t> from;
};

char32_t FoldOne(char32_t c, const MatchConfig& config) {
  if (text::IsSpace(c)) return U' ';
  if (config.hyphen_space_equiv && text::IsHyphen(c)) return U' ';
  return config.case_fold ? text::ToLower(c) : c;
}

Folded Fold(std::u32string_view s, const MatchConfig& config) {
  Folded f;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char32_t c = FoldOne(s[i], config);
    const bool space_run = c == U' ' && (f.chars.empty() || f.chars.back() == U' ');
    if (space_run) continue;
    f.chars.push_back(c);
    f.from.push_back(i);
  }
  return f;
}

struct Occurrence {
  std::set<std::string> aliases;
  std::set<std::string> candidates;
  std::set<std::string> full_name_of;
  std::size_t key_length = 0;
};

}  // namespace

std::vector<RawMention> OracleScan(const AlgorithmDictionary& dictionary,
                                   const MatchConfig& config,
                                   const Sentence& sentence) {
  const std::u32string original = text::Decode(sentence.text);
  const Folded hay = Fold(original, config);
  const std::size_t threshold = static_cast<std::size_t>(std::max(0, config.short_alias_threshold));

  // (start, end) in original offsets -> merged occurrence.
  std::map<std::pair<std::size_t, std::size_t>, Occurrence> found;
  for (const AlgorithmEntry& entry : dictionary.entries()) {
    for (const std::string& alias : entry.aliases) {
      std::u32string needle = Fold(text::Decode(alias), config).chars;
      while (!needle.empty() && needle.back() == U' ') needle.pop_back();
      if (needle.empty() || needle.size() > hay.chars.size()) continue;
      for (std::size_t p = 0; p + needle.size() <= hay.chars.size(); ++p) {
        if (!std::equal(needle.begin(), needle.end(), hay.chars.begin() + p)) continue;
        const std::size_t start = hay.from[p];
        const std::size_t end = hay.from[p + needle.size() - 1] + 1;
        const bool left_ok = start == 0 || !text::IsAlnum(original[start - 1]);
        const bool right_ok = end == original.size() || !text::IsAlnum(original[end]);
        if (!left_ok || !right_ok) continue;
        const bool is_short = needle.size() <= threshold;
        if (is_short && config.short_alias_requires_uppercase &&
            !text::IsAllUppercase(std::u32string_view(original).substr(start, end - start))) {
          continue;
        }
        Occurrence& occ = found[{start, end}];
        occ.aliases.insert(alias);
        occ.candidates.insert(entry.canonical);
        if (!entry.IsAbbreviation(alias)) occ.full_name_of.insert(entry.canonical);
        occ.key_length = needle.size();
      }
    }
  }

  // Leftmost-longest: walk positions left to right, take the longest
  // occurrence starting at the first admissible position.
  std::vector<RawMention> mentions;
  std::size_t pos = 0;
  while (true) {
    auto best = found.end();
    for (auto it = found.begin(); it != found.end(); ++it) {
      if (it->first.first < pos) continue;
      if (best == found.end() || it->first.first < best->first.first ||
          (it->first.first == best->first.first && it->first.second > best->first.second)) {
        best = it;
      }
    }
    if (best == found.end()) break;
    const auto [start, end] = best->first;
    const Occurrence& occ = best->second;
    RawMention m;
    m.sentence_index = sentence.index;
    m.start = static_cast<int>(start);
    m.end = static_cast<int>(end);
    m.surface = text::Encode(std::u32string_view(original).substr(start, end - start));
    const std::string lowered = text::NormalizeName(m.surface);
    m.alias = occ.aliases.count(lowered) ? lowered : *occ.aliases.begin();
    m.candidates.assign(occ.candidates.begin(), occ.candidates.end());
    m.full_name_of.assign(occ.full_name_of.begin(), occ.full_name_of.end());
    m.short_alias = occ.key_length <= threshold;
    mentions.push_back(std::move(m));
    pos = end;
  }
  return mentions;
}

}  // namespace algomine
