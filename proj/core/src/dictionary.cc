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

#include "algomine/dictionary.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "algomine/corpus.h"
#include "algomine/error.h"
#include "algomine/text.h"
#include "json.hpp"

namespace algomine {
namespace {

using json = nlohmann::json;

constexpr std::string_view kCategoryNames[kCategoryCount] = {
    "classification", "clustering",   "dimension_reduction",
    "grammar",        "ensemble",     "link_analysis",
    "metric",         "neural_network", "optimization",
    "probabilistic_graphical_model",  "regression",
    "search",         "nlp_unique",   "other",
};

constexpr std::string_view kEraNames[4] = {"syntactic", "traditional_ml",
                                           "deep_learning", "other"};

void SortUnique(std::vector<std::string>* v) {
  std::sort(v->begin(), v->end());
  v->erase(std::unique(v->begin(), v->end()), v->end());
}

std::vector<std::string> JsonStringList(const json& record, const char* key,
                                        const std::string& locus) {
  std::vector<std::string> out;
  const auto it = record.find(key);
  if (it == record.end() || it->is_null()) return out;
  if (!it->is_array()) {
    throw InputError(locus + ": \"" + key + "\" must be an array of strings");
  }
  for (const json& v : *it) {
    if (!v.is_string()) {
      throw InputError(locus + ": \"" + key + "\" must be an array of strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::optional<Category> CategoryTag(std::string_view raw, const std::string& locus) {
  const std::string tag = text::NormalizeName(raw);
  if (tag.empty()) return std::nullopt;
  auto c = ParseCategory(tag);
  if (!c) throw InputError(locus + ": unknown category '" + std::string(raw) + "'");
  return c;
}

std::optional<EraGroup> EraTag(std::string_view raw, const std::string& locus) {
  const std::string tag = text::NormalizeName(raw);
  if (tag.empty()) return std::nullopt;
  auto g = ParseEraGroup(tag);
  if (!g) throw InputError(locus + ": unknown era_group '" + std::string(raw) + "'");
  return g;
}

}  // namespace

std::string_view CategoryName(Category category) {
  return kCategoryNames[static_cast<int>(category)];
}

std::optional<Category> ParseCategory(std::string_view name) {
  for (int i = 0; i < kCategoryCount; ++i) {
    if (kCategoryNames[i] == name) return static_cast<Category>(i);
  }
  return std::nullopt;
}

std::string_view EraGroupName(EraGroup group) {
  return kEraNames[static_cast<int>(group)];
}

std::optional<EraGroup> ParseEraGroup(std::string_view name) {
  for (int i = 0; i < 4; ++i) {
    if (kEraNames[i] == name) return static_cast<EraGroup>(i);
  }
  return std::nullopt;
}

bool AlgorithmEntry::IsAbbreviation(std::string_view alias) const {
  return std::binary_search(abbreviations.begin(), abbreviations.end(), alias);
}

AlgorithmDictionary AlgorithmDictionary::Create(std::vector<AlgorithmEntry> entries,
                                                std::vector<std::string>* warnings) {
  if (entries.empty()) throw InputError("dictionary has no entries");
  AlgorithmDictionary d;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    AlgorithmEntry& e = entries[i];
    const std::string where = "dictionary entry " + std::to_string(i + 1);
    e.canonical = text::NormalizeName(e.canonical);
    if (e.canonical.empty()) throw InputError(where + ": empty canonical name");

    std::vector<std::string> aliases;
    std::set<std::string> seen;
    auto add = [&](const std::string& raw, bool explicit_alias) {
      std::string a = text::NormalizeName(raw);
      if (a.empty()) {
        throw InputError(where + " ('" + e.canonical + "'): empty alias");
      }
      if (!seen.insert(a).second) {
        if (explicit_alias && warnings && a != e.canonical) {
          warnings->push_back(where + " ('" + e.canonical +
                              "'): duplicate alias '" + a + "' removed");
        }
        return;
      }
      aliases.push_back(std::move(a));
    };
    seen.insert(e.canonical);
    aliases.push_back(e.canonical);
    for (const std::string& a : e.aliases) add(a, true);

    std::vector<std::string> abbreviations;
    for (const std::string& raw : e.abbreviations) {
      std::string a = text::NormalizeName(raw);
      if (a.empty()) {
        throw InputError(where + " ('" + e.canonical + "'): empty abbreviation");
      }
      if (!seen.count(a)) add(a, false);
      abbreviations.push_back(std::move(a));
    }
    SortUnique(&aliases);
    SortUnique(&abbreviations);
    e.aliases = std::move(aliases);
    e.abbreviations = std::move(abbreviations);

    if (!d.by_canonical_.emplace(e.canonical, i).second) {
      throw InputError(where + ": duplicate canonical name '" + e.canonical + "'");
    }
  }
  d.entries_ = std::move(entries);

  for (const AlgorithmEntry& e : d.entries_) {
    for (const std::string& a : e.aliases) d.alias_owners_[a].push_back(e.canonical);
  }
  for (auto& [alias, owners] : d.alias_owners_) {
    std::sort(owners.begin(), owners.end());
    if (owners.size() >= 2) d.ambiguous_.emplace(alias, owners);
  }
  return d;
}

const AlgorithmEntry* AlgorithmDictionary::Find(std::string_view canonical) const {
  const auto it = by_canonical_.find(canonical);
  return it == by_canonical_.end() ? nullptr : &entries_[it->second];
}

std::size_t AlgorithmDictionary::total_alias_count() const {
  std::size_t n = 0;
  for (const AlgorithmEntry& e : entries_) n += e.aliases.size();
  return n;
}

AlgorithmDictionary ParseDictionaryJson(std::string_view content,
                                        std::string_view source,
                                        std::vector<std::string>* warnings) {
  json doc;
  try {
    doc = json::parse(content);
  } catch (const json::parse_error& e) {
    throw InputError(std::string(source) + ": malformed JSON: " + e.what());
  }
  if (!doc.is_array()) {
    throw InputError(std::string(source) + ": dictionary must be a JSON array");
  }
  std::vector<AlgorithmEntry> entries;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& rec = doc[i];
    const std::string locus = std::string(source) + ": entry " + std::to_string(i + 1);
    if (!rec.is_object()) throw InputError(locus + ": not a JSON object");
    const auto canonical = rec.find("canonical");
    if (canonical == rec.end() || !canonical->is_string()) {
      throw InputError(locus + ": missing string field \"canonical\"");
    }
    AlgorithmEntry e;
    e.canonical = canonical->get<std::string>();
    e.aliases = JsonStringList(rec, "aliases", locus);
    e.abbreviations = JsonStringList(rec, "abbreviations", locus);
    for (const char* key : {"category", "era_group"}) {
      const auto it = rec.find(key);
      if (it == rec.end() || it->is_null()) continue;
      if (!it->is_string()) {
        throw InputError(locus + ": \"" + key + "\" must be a string");
      }
      if (std::string_view(key) == "category") {
        e.category = CategoryTag(it->get<std::string>(), locus);
      } else {
        e.era_group = EraTag(it->get<std::string>(), locus);
      }
    }
    entries.push_back(std::move(e));
  }
  try {
    return AlgorithmDictionary::Create(std::move(entries), warnings);
  } catch (const InputError& e) {
    throw InputError(std::string(source) + ": " + e.what());
  }
}

AlgorithmDictionary ParseDictionaryTsv(std::string_view content,
                                       std::string_view source,
                                       std::vector<std::string>* warnings) {
  std::vector<AlgorithmEntry> entries;
  std::istringstream in{std::string(content)};
  std::string line;
  int line_no = 0;
  auto pipe_list = [](const std::string& field) {
    std::vector<std::string> out;
    for (std::string& part : text::Split(field, '|')) {
      if (part.find_first_not_of(" \t") != std::string::npos) out.push_back(std::move(part));
    }
    return out;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const std::string locus = std::string(source) + ":" + std::to_string(line_no);
    const std::vector<std::string> cols = text::Split(line, '\t');
    if (cols.size() > 5) throw InputError(locus + ": too many columns");
    AlgorithmEntry e;
    e.canonical = cols[0];
    if (text::NormalizeName(e.canonical).empty()) {
      throw InputError(locus + ": empty canonical name");
    }
    if (cols.size() > 1) e.aliases = pipe_list(cols[1]);
    if (cols.size() > 2) e.abbreviations = pipe_list(cols[2]);
    if (cols.size() > 3) e.category = CategoryTag(cols[3], locus);
    if (cols.size() > 4) e.era_group = EraTag(cols[4], locus);
    entries.push_back(std::move(e));
  }
  try {
    return AlgorithmDictionary::Create(std::move(entries), warnings);
  } catch (const InputError& e) {
    throw InputError(std::string(source) + ": " + e.what());
  }
}

AlgorithmDictionary LoadDictionary(const std::filesystem::path& path,
                                   std::vector<std::string>* warnings) {
  const std::string content = ReadFile(path);
  const std::size_t first = content.find_first_not_of(" \t\r\n");
  const bool json_like = first != std::string::npos && content[first] == '[';
  if (path.extension() == ".json" || json_like) {
    return ParseDictionaryJson(content, path.string(), warnings);
  }
  return ParseDictionaryTsv(content, path.string(), warnings);
}

std::string SerializeDictionaryJson(const AlgorithmDictionary& dictionary) {
  json out = json::array();
  for (const AlgorithmEntry& e : dictionary.entries()) {
    json rec = json::object();
    rec["canonical"] = e.canonical;
    rec["aliases"] = e.aliases;
    rec["abbreviations"] = e.abbreviations;
    if (e.category) rec["category"] = std::string(CategoryName(*e.category));
    if (e.era_group) rec["era_group"] = std::string(EraGroupName(*e.era_group));
    out.push_back(std::move(rec));
  }
  return out.dump(2) + "\n";
}

const std::vector<std::string>& Stopwords() {
  static const std::vector<std::string> kWords = [] {
    std::vector<std::string> w = {
        "a", "about", "above", "after", "again", "against", "all", "am", "an",
        "and", "any", "are", "as", "at", "be", "because", "been", "before",
        "being", "below", "between", "both", "but", "by", "can", "did", "do",
        "does", "doing", "down", "during", "each", "few", "for", "from",
        "further", "had", "has", "have", "having", "he", "her", "here",
        "hers", "herself", "him", "himself", "his", "how", "i", "if", "in",
        "into", "is", "it", "its", "itself", "just", "me", "more", "most",
        "my", "myself", "no", "nor", "not", "now", "of", "off", "on", "once",
        "only", "or", "other", "our", "ours", "ourselves", "out", "over",
        "own", "same", "she", "should", "so", "some", "such", "than", "that",
        "the", "their", "theirs", "them", "themselves", "then", "there",
        "these", "they", "this", "those", "through", "to", "too", "under",
        "until", "up", "very", "was", "we", "were", "what", "when", "where",
        "which", "while", "who", "whom", "why", "will", "with", "you", "your",
        "yours", "yourself", "yourselves",
    };
    std::sort(w.begin(), w.end());
    return w;
  }();
  return kWords;
}

ValidationReport ValidateDictionary(const AlgorithmDictionary& dictionary,
                                    int short_alias_threshold) {
  ValidationReport report;
  const auto& stop = Stopwords();
  for (const auto& [alias, owners] : dictionary.alias_owners()) {
    if (owners.size() >= 2) report.ambiguous.push_back({alias, owners});
    if (text::Length(alias) <= static_cast<std::size_t>(std::max(0, short_alias_threshold))) {
      report.short_aliases.push_back({alias, owners});
    }
    if (std::binary_search(stop.begin(), stop.end(), alias)) {
      report.stopword_aliases.push_back({alias, owners});
    }
  }
  return report;
}

std::string ValidationReportJson(const ValidationReport& report) {
  auto list = [](const std::vector<ValidationReport::AliasOwners>& items) {
    json arr = json::array();
    for (const auto& item : items) {
      arr.push_back({{"alias", item.alias}, {"owners", item.owners}});
    }
    return arr;
  };
  json out = {{"ambiguous", list(report.ambiguous)},
              {"short_aliases", list(report.short_aliases)},
              {"stopword_aliases", list(report.stopword_aliases)}};
  return out.dump(2) + "\n";
}

}  // namespace algomine
