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

#ifndef ALGOMINE_EXTRACT_H_
#define ALGOMINE_EXTRACT_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algomine/corpus.h"
#include "algomine/dictionary.h"
#include "algomine/matcher.h"

namespace algomine {

enum class Resolution { kDirect, kCooccurrence, kUniqueCandidate, kUnresolved };

std::string_view ResolutionName(Resolution resolution);
std::optional<Resolution> ParseResolution(std::string_view name);

enum class UnresolvedAction {
  kDrop,          // unresolved mentions are removed
  kKeepFlagged,   // kept with an empty canonical
  kAssignUnique,  // single-candidate aliases are assigned; the rest dropped
};

std::optional<UnresolvedAction> ParseUnresolvedAction(std::string_view name);

// Resolution scope is always the document.
struct DisambiguationPolicy {
  UnresolvedAction unresolved_action = UnresolvedAction::kDrop;
};

struct MentionRecord {
  std::string doc_id;
  int year = 0;
  int sentence_index = 0;
  Section section = Section::kBody;
  int start = 0;
  int end = 0;
  std::string surface;
  std::string alias;
  std::string canonical;  // empty iff unresolved
  Resolution resolution = Resolution::kUnresolved;
  std::vector<std::string> candidates;
  std::optional<Category> category;
  std::optional<EraGroup> era_group;

  friend bool operator==(const MentionRecord&, const MentionRecord&) = default;
};

// Resolves one document's mentions:
//  1. single-owner, non-short alias            -> direct
//  2. otherwise, exactly one candidate c has a full-name mention elsewhere
//     in the document                          -> cooccurrence
//  3. no supporting mention, single candidate,
//     policy assign_unique                     -> unique_candidate
//  4. everything else (including two or more supported candidates)
//                                              -> unresolved
// Unresolved mentions are dropped or kept per policy. Output follows the
// input order.
std::vector<MentionRecord> ResolveAbbreviations(
    const Document& doc, const std::vector<RawMention>& mentions,
    const AlgorithmDictionary& dictionary, const DisambiguationPolicy& policy);

struct UnresolvedSummary {
  std::string alias;
  std::vector<std::string> candidates;
  std::int64_t mentions = 0;
  std::int64_t documents = 0;
};

struct ExtractionResult {
  // Sorted by (doc_id, sentence_index, start).
  std::vector<MentionRecord> records;
  // Every mention left unresolved before the policy was applied, grouped by
  // alias; sorted by alias.
  std::vector<UnresolvedSummary> unresolved;
};

struct ExtractOptions {
  unsigned threads = 1;
};

// Finds the raw mentions of one sentence; must be safe to call from
// several threads at once.
using MentionFinder = std::function<std::vector<RawMention>(const Sentence&)>;

ExtractionResult ExtractCorpusMentions(const std::vector<Document>& corpus,
                                       const MentionFinder& finder,
                                       const AlgorithmDictionary& dictionary,
                                       const DisambiguationPolicy& policy,
                                       const ExtractOptions& options = {});

ExtractionResult ExtractCorpusMentions(const std::vector<Document>& corpus,
                                       const Matcher& matcher,
                                       const AlgorithmDictionary& dictionary,
                                       const DisambiguationPolicy& policy,
                                       const ExtractOptions& options = {});

}  // namespace algomine

#endif  // ALGOMINE_EXTRACT_H_
