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

#ifndef ALGOMINE_CORPUS_H_
#define ALGOMINE_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace algomine {

enum class Section { kTitle, kAbstract, kBody, kCaption, kOther };

std::string_view SectionName(Section section);
// Unknown tags collapse to kOther.
Section ParseSection(std::string_view tag);

struct Sentence {
  int index = 0;
  Section section = Section::kBody;
  std::string text;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Document {
  std::string doc_id;
  int year = 0;
  std::string title;
  std::vector<Sentence> sentences;

  friend bool operator==(const Document&, const Document&) = default;
};

// year -> number of documents published that year. Years without documents
// are absent.
using YearlyCounts = std::map<int, std::int64_t>;

YearlyCounts ComputeYearlyCounts(const std::vector<Document>& corpus);

// Rule-based sentence splitter. A break happens after a run of '.', '!' or
// '?' (plus any closing quotes or brackets) when whitespace follows and the
// next character is an uppercase letter or a digit, unless the word ending
// at the terminator is a known abbreviation or a single capital letter.
class SentenceSplitter {
 public:
  // Uses DefaultAbbreviations().
  SentenceSplitter();
  explicit SentenceSplitter(std::vector<std::string> abbreviations);

  // One abbreviation per line, '#' starts a comment. Entries are added to
  // the default list.
  static SentenceSplitter FromFile(const std::filesystem::path& path);
  static const std::vector<std::string>& DefaultAbbreviations();

  std::vector<Sentence> Split(std::string_view raw_text,
                              Section section = Section::kBody) const;

  const std::vector<std::string>& abbreviations() const {
    return abbreviations_;
  }

 private:
  // `period` indexes a '.' in `text`.
  bool IsAbbreviationAt(std::u32string_view text, std::size_t period) const;

  std::vector<std::string> abbreviations_;
  // Abbreviations split into words, decoded.
  std::vector<std::vector<std::u32string>> words_;
};

std::vector<Sentence> SegmentSentences(std::string_view raw_text);

enum class CorpusFormat { kJsonl, kXml };

std::optional<CorpusFormat> ParseCorpusFormat(std::string_view name);

struct CorpusOptions {
  int min_year = 1900;
  int max_year = 2015;
  // Documents later than max_year are dropped (and reported through the
  // warnings list) instead of rejected.
  bool drop_late_documents = false;
  const SentenceSplitter* splitter = nullptr;  // nullptr: default splitter
};

// Parses corpus content already in memory. `source` names the input in
// error messages. Throws InputError on malformed records, duplicate ids,
// and years outside the window.
std::vector<Document> ParseCorpus(std::string_view content, CorpusFormat format,
                                  const CorpusOptions& options,
                                  std::string_view source = "<memory>",
                                  std::vector<std::string>* warnings = nullptr);

std::vector<Document> LoadCorpus(const std::filesystem::path& path,
                                 CorpusFormat format,
                                 const CorpusOptions& options = {},
                                 std::vector<std::string>* warnings = nullptr);

// Reads a whole file; throws InputError when it cannot be opened.
std::string ReadFile(const std::filesystem::path& path);

}  // namespace algomine

#endif  // ALGOMINE_CORPUS_H_
