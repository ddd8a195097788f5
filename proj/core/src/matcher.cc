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

#include "algomine/matcher.h"

#include <algorithm>
#include <deque>
#include <map>

#include "algomine/error.h"
#include "algomine/text.h"

namespace algomine {
namespace {

struct Hit {
  std::int32_t start;
  std::int32_t end;
  std::int32_t pattern;
};

void SortUnique(std::vector<std::string>* v) {
  std::sort(v->begin(), v->end());
  v->erase(std::unique(v->begin(), v->end()), v->end());
}

}  // namespace

NormalizedText NormalizeForMatching(std::u32string_view original,
                                    const MatchConfig& config) {
  NormalizedText out;
  out.chars.reserve(original.size());
  out.origin.reserve(original.size());
  for (std::size_t i = 0; i < original.size(); ++i) {
    char32_t c = original[i];
    if (text::IsSpace(c) || (config.hyphen_space_equiv && text::IsHyphen(c))) {
      c = U' ';
    } else if (config.case_fold) {
      c = text::ToLower(c);
    }
    if (c == U' ' && (out.chars.empty() || out.chars.back() == U' ')) continue;
    out.chars.push_back(c);
    out.origin.push_back(static_cast<std::int32_t>(i));
  }
  return out;
}

std::u32string PatternKey(std::string_view alias, const MatchConfig& config) {
  std::u32string key = NormalizeForMatching(text::Decode(alias), config).chars;
  while (!key.empty() && key.back() == U' ') key.pop_back();
  return key;
}

Matcher Matcher::Build(const AlgorithmDictionary& dictionary,
                       const MatchConfig& config) {
  if (dictionary.size() == 0) throw InputError("cannot build a matcher from an empty dictionary");
  if (config.short_alias_threshold < 0) {
    throw InputError("short alias threshold must be >= 0");
  }
  Matcher m;
  m.config_ = config;

  std::map<std::u32string, Pattern> by_key;
  for (const AlgorithmEntry& e : dictionary.entries()) {
    for (const std::string& alias : e.aliases) {
      std::u32string key = PatternKey(alias, config);
      if (key.empty()) continue;
      Pattern& p = by_key[key];
      p.aliases.push_back(alias);
      p.candidates.push_back(e.canonical);
      if (!e.IsAbbreviation(alias)) p.full_name_of.push_back(e.canonical);
    }
  }

  m.nodes_.emplace_back();
  for (auto& [key, pattern] : by_key) {
    pattern.key = key;
    SortUnique(&pattern.aliases);
    SortUnique(&pattern.candidates);
    SortUnique(&pattern.full_name_of);
    const auto index = static_cast<std::int32_t>(m.patterns_.size());

    std::int32_t node = 0;
    for (char32_t c : key) {
      std::int32_t child = m.Child(node, c);
      if (child < 0) {
        child = static_cast<std::int32_t>(m.nodes_.size());
        auto& next = m.nodes_[node].next;
        next.insert(std::lower_bound(next.begin(), next.end(), std::make_pair(c, std::int32_t{0})),
                    {c, child});
        Node fresh;
        fresh.depth = m.nodes_[node].depth + 1;
        m.nodes_.push_back(std::move(fresh));
      }
      node = child;
    }
    m.nodes_[node].pattern = index;
    m.patterns_.push_back(std::move(pattern));
  }

  // Breadth-first failure and output links.
  std::deque<std::int32_t> queue;
  for (const auto& [c, child] : m.nodes_[0].next) {
    m.nodes_[child].fail = 0;
    queue.push_back(child);
  }
  while (!queue.empty()) {
    const std::int32_t node = queue.front();
    queue.pop_front();
    for (const auto& [c, child] : m.nodes_[node].next) {
      const std::int32_t fail = m.Step(m.nodes_[node].fail, c);
      m.nodes_[child].fail = fail;
      m.nodes_[child].output =
          m.nodes_[fail].pattern >= 0 ? fail : m.nodes_[fail].output;
      queue.push_back(child);
    }
  }
  return m;
}

std::int32_t Matcher::Child(std::int32_t node, char32_t c) const {
  const auto& next = nodes_[node].next;
  const auto it = std::lower_bound(
      next.begin(), next.end(), c,
      [](const std::pair<char32_t, std::int32_t>& p, char32_t v) { return p.first < v; });
  return (it != next.end() && it->first == c) ? it->second : -1;
}

std::int32_t Matcher::Step(std::int32_t node, char32_t c) const {
  while (true) {
    const std::int32_t child = Child(node, c);
    if (child >= 0) return child;
    if (node == 0) return 0;
    node = nodes_[node].fail;
  }
}

int Matcher::FindPattern(const std::u32string& key) const {
  const auto it = std::lower_bound(
      patterns_.begin(), patterns_.end(), key,
      [](const Pattern& p, const std::u32string& k) { return p.key < k; });
  return (it != patterns_.end() && it->key == key)
             ? static_cast<int>(it - patterns_.begin())
             : -1;
}

std::vector<std::string> Matcher::CandidatesFor(std::string_view alias) const {
  const int p = FindPattern(PatternKey(alias, config_));
  return p < 0 ? std::vector<std::string>{} : patterns_[p].candidates;
}

std::vector<RawMention> Matcher::FindMentions(const Sentence& sentence) const {
  return FindMentions(sentence.text, sentence.index);
}

std::vector<RawMention> Matcher::FindMentions(std::string_view sentence_text,
                                              int sentence_index) const {
  const std::u32string original = text::Decode(sentence_text);
  const NormalizedText norm = NormalizeForMatching(original, config_);
  const auto threshold = static_cast<std::size_t>(config_.short_alias_threshold);
  const auto n = static_cast<std::int32_t>(original.size());

  std::vector<Hit> hits;
  std::int32_t node = 0;
  for (std::size_t k = 0; k < norm.chars.size(); ++k) {
    node = Step(node, norm.chars[k]);
    std::int32_t out = nodes_[node].pattern >= 0 ? node : nodes_[node].output;
    for (; out >= 0; out = nodes_[out].output) {
      const Pattern& p = patterns_[nodes_[out].pattern];
      const std::size_t first = k + 1 - p.key.size();
      const std::int32_t start = norm.origin[first];
      const std::int32_t end = norm.origin[k] + 1;
      if (start > 0 && text::IsAlnum(original[start - 1])) continue;
      if (end < n && text::IsAlnum(original[end])) continue;
      if (config_.short_alias_requires_uppercase && p.key.size() <= threshold &&
          !text::IsAllUppercase(std::u32string_view(original).substr(start, end - start))) {
        continue;
      }
      hits.push_back({start, end, nodes_[out].pattern});
    }
  }

  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    return a.start != b.start ? a.start < b.start : a.end > b.end;
  });

  std::vector<RawMention> mentions;
  std::int32_t covered = 0;
  for (const Hit& h : hits) {
    if (h.start < covered) continue;
    covered = h.end;
    const Pattern& p = patterns_[h.pattern];
    RawMention m;
    m.sentence_index = sentence_index;
    m.start = h.start;
    m.end = h.end;
    m.surface = text::Encode(std::u32string_view(original).substr(h.start, h.end - h.start));
    const std::string folded = text::NormalizeName(m.surface);
    m.alias = std::binary_search(p.aliases.begin(), p.aliases.end(), folded)
                  ? folded
                  : p.aliases.front();
    m.candidates = p.candidates;
    m.full_name_of = p.full_name_of;
    m.short_alias = p.key.size() <= threshold;
    mentions.push_back(std::move(m));
  }
  return mentions;
}

}  // namespace algomine
