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

#ifndef ALGOMINE_DICTIONARY_H_
#define ALGOMINE_DICTIONARY_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace algomine {

// Functional taxonomy of NLP algorithms (closed set of 14).
enum class Category {
  kClassification,
  kClustering,
  kDimensionReduction,
  kGrammar,
  kEnsemble,
  kLinkAnalysis,
  kMetric,
  kNeuralNetwork,
  kOptimization,
  kProbabilisticGraphicalModel,
  kRegression,
  kSearch,
  kNlpUnique,
  kOther,
};

inline constexpr int kCategoryCount = 14;

std::string_view CategoryName(Category category);
std::optional<Category> ParseCategory(std::string_view name);

// Epoch grouping used for the per-year era counts.
enum class EraGroup { kSyntactic, kTraditionalMl, kDeepLearning, kOther };

std::string_view EraGroupName(EraGroup group);
std::optional<EraGroup> ParseEraGroup(std::string_view name);

struct AlgorithmEntry {
  // All strings are stored normalized: lowercase, single spaces, trimmed.
  std::string canonical;
  std::vector<std::string> aliases;        // sorted, unique, has canonical
  std::vector<std::string> abbreviations;  // sorted, subset of aliases
  std::optional<Category> category;
  std::optional<EraGroup> era_group;

  bool IsAbbreviation(std::string_view alias) const;
  Category category_or_other() const {
    return category.value_or(Category::kOther);
  }
  EraGroup era_group_or_other() const {
    return era_group.value_or(EraGroup::kOther);
  }

  friend bool operator==(const AlgorithmEntry&, const AlgorithmEntry&) = default;
};

// Immutable after construction. Aliases shared by several entries are legal;
// they are indexed in ambiguous_aliases() and resolved during extraction.
class AlgorithmDictionary {
 public:
  // Normalizes every string, deduplicates aliases within an entry (with a
  // warning), adds the canonical name and any abbreviation missing from the
  // alias list. Throws InputError for an empty entry list, an empty
  // canonical or alias, or a duplicate canonical.
  static AlgorithmDictionary Create(std::vector<AlgorithmEntry> entries,
                                    std::vector<std::string>* warnings = nullptr);

  const std::vector<AlgorithmEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  const AlgorithmEntry* Find(std::string_view canonical) const;

  // alias -> owning canonicals (sorted), for every alias.
  const std::map<std::string, std::vector<std::string>, std::less<>>&
  alias_owners() const {
    return alias_owners_;
  }
  // The subset of alias_owners() with two or more owners.
  const std::map<std::string, std::vector<std::string>, std::less<>>&
  ambiguous_aliases() const {
    return ambiguous_;
  }

  // Sum over entries of |aliases|.
  std::size_t total_alias_count() const;
  // Number of distinct alias strings across the dictionary.
  std::size_t distinct_alias_count() const { return alias_owners_.size(); }

 private:
  std::vector<AlgorithmEntry> entries_;
  std::map<std::string, std::size_t, std::less<>> by_canonical_;
  std::map<std::string, std::vector<std::string>, std::less<>> alias_owners_;
  std::map<std::string, std::vector<std::string>, std::less<>> ambiguous_;
};

// JSON: an array of {"canonical", "aliases", "abbreviations", "category",
// "era_group"}; only "canonical" is required.
AlgorithmDictionary ParseDictionaryJson(std::string_view content,
                                        std::string_view source = "<memory>",
                                        std::vector<std::string>* warnings = nullptr);

// TSV, one algorithm per line:
//   canonical <TAB> alias|alias|... [<TAB> abbr|abbr|... [<TAB> category
//   [<TAB> era_group]]]
// Blank lines and lines starting with '#' are skipped.
AlgorithmDictionary ParseDictionaryTsv(std::string_view content,
                                       std::string_view source = "<memory>",
                                       std::vector<std::string>* warnings = nullptr);

// Picks the format from the extension (.json, otherwise TSV); a leading '['
// forces JSON.
AlgorithmDictionary LoadDictionary(const std::filesystem::path& path,
                                   std::vector<std::string>* warnings = nullptr);

// Stable JSON form; ParseDictionaryJson(SerializeDictionaryJson(d)) == d.
std::string SerializeDictionaryJson(const AlgorithmDictionary& dictionary);

inline constexpr int kDefaultShortAliasThreshold = 3;

struct ValidationReport {
  struct AliasOwners {
    std::string alias;
    std::vector<std::string> owners;
  };
  std::vector<AliasOwners> ambiguous;
  std::vector<AliasOwners> short_aliases;     // length <= threshold
  std::vector<AliasOwners> stopword_aliases;  // equal to a stopword

  bool empty() const {
    return ambiguous.empty() && short_aliases.empty() && stopword_aliases.empty();
  }
};

ValidationReport ValidateDictionary(
    const AlgorithmDictionary& dictionary,
    int short_alias_threshold = kDefaultShortAliasThreshold);

std::string ValidationReportJson(const ValidationReport& report);

// Bundled English stopword list (lowercase, sorted).
const std::vector<std::string>& Stopwords();

}  // namespace algomine

#endif  // ALGOMINE_DICTIONARY_H_
