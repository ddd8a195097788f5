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
#include <fstream>

#include "algomine/corpus.h"
#include "algomine/error.h"
#include "algomine/text.h"

namespace algomine {
namespace {

bool IsTerminator(char32_t cp) { return cp == '.' || cp == '!' || cp == '?'; }

bool IsCloser(char32_t cp) {
  switch (cp) {
    case '"': case '\'': case ')': case ']': case '}':
    case 0x2019: case 0x201D: case 0xBB:
      return true;
    default:
      return false;
  }
}

bool IsOpener(char32_t cp) {
  switch (cp) {
    case '"': case '\'': case '(': case '[': case '{':
    case 0x2018: case 0x201C: case 0xAB:
      return true;
    default:
      return false;
  }
}

bool IsDigit(char32_t cp) { return cp >= '0' && cp <= '9'; }

}  // namespace

const std::vector<std::string>& SentenceSplitter::DefaultAbbreviations() {
  static const std::vector<std::string> kList = {
      "e.g.",  "i.e.",  "et al.", "cf.",    "vs.",   "viz.",  "Fig.",
      "Figs.", "fig.",  "figs.",  "Eq.",    "Eqs.",  "eq.",   "eqs.",
      "Tab.",  "Sec.",  "Sect.",  "Ch.",    "No.",   "no.",   "Vol.",
      "pp.",   "p.",    "Dr.",    "Mr.",    "Mrs.",  "Ms.",   "Prof.",
      "approx.", "resp.", "Jr.",  "St.",    "Inc.",  "Ltd.",  "Corp.",
  };
  return kList;
}

SentenceSplitter::SentenceSplitter()
    : SentenceSplitter(DefaultAbbreviations()) {}

SentenceSplitter::SentenceSplitter(std::vector<std::string> abbreviations)
    : abbreviations_(std::move(abbreviations)) {
  for (const std::string& entry : abbreviations_) {
    std::vector<std::u32string> words;
    for (const std::string& w : text::Split(text::CollapseWhitespace(entry), ' ')) {
      if (!w.empty()) words.push_back(text::Decode(w));
    }
    if (!words.empty() && words.back().back() == U'.') {
      words_.push_back(std::move(words));
    }
  }
}

SentenceSplitter SentenceSplitter::FromFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open abbreviation list '" + path.string() + "'");
  }
  std::vector<std::string> list = DefaultAbbreviations();
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = text::CollapseWhitespace(line);
    if (line.empty()) continue;
    if (line.back() != '.') {
      throw InputError("abbreviation '" + line + "' in '" + path.string() +
                       "' must end with '.'");
    }
    if (std::find(list.begin(), list.end(), line) == list.end()) {
      list.push_back(line);
    }
  }
  return SentenceSplitter(std::move(list));
}

bool SentenceSplitter::IsAbbreviationAt(std::u32string_view text,
                                        std::size_t period) const {
  // Collect whitespace-separated words ending at the period, last first.
  std::vector<std::u32string_view> words;
  std::size_t end = period + 1;
  while (words.size() < 4) {
    std::size_t begin = end;
    while (begin > 0 && !text::IsSpace(text[begin - 1])) --begin;
    if (begin == end) break;
    words.push_back(text.substr(begin, end - begin));
    while (begin > 0 && text::IsSpace(text[begin - 1])) --begin;
    if (begin == 0) break;
    end = begin;
  }
  if (words.empty()) return false;

  // The innermost word may carry opening punctuation: "(e.g." or "[Fig.".
  auto strip_openers = [](std::u32string_view w) {
    while (w.size() > 1 && IsOpener(w.front())) w.remove_prefix(1);
    return w;
  };

  const std::u32string_view last = strip_openers(words[0]);
  if (last.size() == 2 && text::IsUpper(last[0])) return true;

  for (const auto& entry : words_) {
    if (entry.size() > words.size()) continue;
    bool match = true;
    for (std::size_t k = 0; k < entry.size() && match; ++k) {
      std::u32string_view word = words[k];
      if (k + 1 == entry.size()) word = strip_openers(word);
      match = word == entry[entry.size() - 1 - k];
    }
    if (match) return true;
  }
  return false;
}

std::vector<Sentence> SentenceSplitter::Split(std::string_view raw_text,
                                              Section section) const {
  const std::u32string text = text::Decode(raw_text);
  const std::size_t n = text.size();
  std::vector<Sentence> sentences;

  auto emit = [&](std::size_t begin, std::size_t end) {
    std::string piece =
        text::CollapseWhitespace(text::Encode(std::u32string_view(text).substr(begin, end - begin)));
    if (piece.empty()) return;
    Sentence s;
    s.index = static_cast<int>(sentences.size());
    s.section = section;
    s.text = std::move(piece);
    sentences.push_back(std::move(s));
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < n) {
    if (!IsTerminator(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && IsTerminator(text[j])) ++j;
    const bool single_period = (j == i + 1 && text[i] == '.');
    while (j < n && IsCloser(text[j])) ++j;
    if (j >= n || !text::IsSpace(text[j])) {
      i = j;
      continue;
    }
    std::size_t next = j;
    while (next < n && text::IsSpace(text[next])) ++next;
    if (next >= n || !(text::IsUpper(text[next]) || IsDigit(text[next]))) {
      i = next;
      continue;
    }
    if (single_period && IsAbbreviationAt(text, i)) {
      i = next;
      continue;
    }
    emit(start, j);
    start = next;
    i = next;
  }
  if (start < n) emit(start, n);
  return sentences;
}

std::vector<Sentence> SegmentSentences(std::string_view raw_text) {
  static const SentenceSplitter kDefault;
  return kDefault.Split(raw_text);
}

}  // namespace algomine
