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

#include "algomine/extract.h"

#include <algorithm>
#include <map>
#include <set>
#include <exception>
#include <thread>
#include <tuple>

#include "algomine/error.h"

namespace algomine {
namespace {

constexpr std::string_view kResolutionNames[] = {"direct", "cooccurrence",
                                                 "unique_candidate", "unresolved"};

// All records of one document, unresolved ones included.
std::vector<MentionRecord> ResolveAll(const Document& doc,
                                      const std::vector<RawMention>& mentions,
                                      const AlgorithmDictionary& dictionary,
                                      bool assign_unique) {
  std::vector<MentionRecord> records;
  records.reserve(mentions.size());
  for (std::size_t i = 0; i < mentions.size(); ++i) {
    const RawMention& m = mentions[i];
    if (m.candidates.empty()) {
      throw InvariantError("mention '" + m.surface + "' in '" + doc.doc_id +
                           "' has no candidates");
    }
    if (m.sentence_index < 0 ||
        static_cast<std::size_t>(m.sentence_index) >= doc.sentences.size()) {
      throw InvariantError("mention sentence index out of range in '" + doc.doc_id + "'");
    }
    MentionRecord r;
    r.doc_id = doc.doc_id;
    r.year = doc.year;
    r.sentence_index = m.sentence_index;
    r.section = doc.sentences[m.sentence_index].section;
    r.start = m.start;
    r.end = m.end;
    r.surface = m.surface;
    r.alias = m.alias;
    r.candidates = m.candidates;

    if (m.candidates.size() == 1 && !m.short_alias) {
      r.canonical = m.candidates.front();
      r.resolution = Resolution::kDirect;
    } else {
      std::vector<std::string> supported;
      for (const std::string& c : m.candidates) {
        for (std::size_t j = 0; j < mentions.size(); ++j) {
          if (j == i) continue;
          const auto& full = mentions[j].full_name_of;
          if (std::binary_search(full.begin(), full.end(), c)) {
            supported.push_back(c);
            break;
          }
        }
      }
      if (supported.size() == 1) {
        r.canonical = supported.front();
        r.resolution = Resolution::kCooccurrence;
      } else if (supported.empty() && m.candidates.size() == 1 && assign_unique) {
        r.canonical = m.candidates.front();
        r.resolution = Resolution::kUniqueCandidate;
      } else {
        r.resolution = Resolution::kUnresolved;
      }
    }

    if (!r.canonical.empty()) {
      const AlgorithmEntry* entry = dictionary.Find(r.canonical);
      if (entry == nullptr) {
        throw InvariantError("resolved canonical '" + r.canonical +
                             "' is not in the dictionary");
      }
      r.category = entry->category;
      r.era_group = entry->era_group;
    }
    records.push_back(std::move(r));
  }
  return records;
}

bool KeepRecord(const MentionRecord& r, const DisambiguationPolicy& policy) {
  return r.resolution != Resolution::kUnresolved ||
         policy.unresolved_action == UnresolvedAction::kKeepFlagged;
}

struct DocumentOutput {
  std::vector<MentionRecord> all;
};

DocumentOutput ProcessDocument(const Document& doc, const MentionFinder& finder,
                               const AlgorithmDictionary& dictionary,
                               const DisambiguationPolicy& policy) {
  std::vector<RawMention> raw;
  for (const Sentence& s : doc.sentences) {
    for (RawMention& m : finder(s)) raw.push_back(std::move(m));
  }
  return {ResolveAll(doc, raw, dictionary,
                     policy.unresolved_action == UnresolvedAction::kAssignUnique)};
}

}  // namespace

std::string_view ResolutionName(Resolution resolution) {
  return kResolutionNames[static_cast<int>(resolution)];
}

std::optional<Resolution> ParseResolution(std::string_view name) {
  for (int i = 0; i < 4; ++i) {
    if (kResolutionNames[i] == name) return static_cast<Resolution>(i);
  }
  return std::nullopt;
}

std::optional<UnresolvedAction> ParseUnresolvedAction(std::string_view name) {
  if (name == "drop") return UnresolvedAction::kDrop;
  if (name == "keep" || name == "keep_flagged" || name == "keep-flagged") {
    return UnresolvedAction::kKeepFlagged;
  }
  if (name == "assign-unique" || name == "assign_unique") {
    return UnresolvedAction::kAssignUnique;
  }
  return std::nullopt;
}

std::vector<MentionRecord> ResolveAbbreviations(
    const Document& doc, const std::vector<RawMention>& mentions,
    const AlgorithmDictionary& dictionary, const DisambiguationPolicy& policy) {
  std::vector<MentionRecord> all =
      ResolveAll(doc, mentions, dictionary,
                 policy.unresolved_action == UnresolvedAction::kAssignUnique);
  std::vector<MentionRecord> kept;
  kept.reserve(all.size());
  for (MentionRecord& r : all) {
    if (KeepRecord(r, policy)) kept.push_back(std::move(r));
  }
  return kept;
}

ExtractionResult ExtractCorpusMentions(const std::vector<Document>& corpus,
                                       const Matcher& matcher,
                                       const AlgorithmDictionary& dictionary,
                                       const DisambiguationPolicy& policy,
                                       const ExtractOptions& options) {
  return ExtractCorpusMentions(
      corpus, [&matcher](const Sentence& s) { return matcher.FindMentions(s); },
      dictionary, policy, options);
}

ExtractionResult ExtractCorpusMentions(const std::vector<Document>& corpus,
                                       const MentionFinder& finder,
                                       const AlgorithmDictionary& dictionary,
                                       const DisambiguationPolicy& policy,
                                       const ExtractOptions& options) {
  std::vector<DocumentOutput> outputs(corpus.size());
  const unsigned threads =
      std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(corpus.size())));
  if (threads <= 1) {
    for (std::size_t d = 0; d < corpus.size(); ++d) {
      outputs[d] = ProcessDocument(corpus[d], finder, dictionary, policy);
    }
  } else {
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          try {
            for (std::size_t d = t; d < corpus.size(); d += threads) {
              outputs[d] = ProcessDocument(corpus[d], finder, dictionary, policy);
            }
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  ExtractionResult result;
  std::map<std::string, UnresolvedSummary> unresolved;
  std::map<std::string, std::set<std::string>> unresolved_docs;
  for (DocumentOutput& out : outputs) {
    for (MentionRecord& r : out.all) {
      if (r.resolution == Resolution::kUnresolved) {
        UnresolvedSummary& s = unresolved[r.alias];
        s.alias = r.alias;
        for (const std::string& c : r.candidates) {
          if (std::find(s.candidates.begin(), s.candidates.end(), c) == s.candidates.end()) {
            s.candidates.push_back(c);
          }
        }
        ++s.mentions;
        unresolved_docs[r.alias].insert(r.doc_id);
      }
      if (KeepRecord(r, policy)) result.records.push_back(std::move(r));
    }
  }
  for (auto& [alias, s] : unresolved) {
    std::sort(s.candidates.begin(), s.candidates.end());
    s.documents = static_cast<std::int64_t>(unresolved_docs[alias].size());
    result.unresolved.push_back(std::move(s));
  }

  std::sort(result.records.begin(), result.records.end(),
            [](const MentionRecord& a, const MentionRecord& b) {
              return std::tie(a.doc_id, a.sentence_index, a.start) <
                     std::tie(b.doc_id, b.sentence_index, b.start);
            });
  return result;
}

}  // namespace algomine
