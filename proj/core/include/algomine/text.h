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

#ifndef ALGOMINE_TEXT_H_
#define ALGOMINE_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// UTF-8 helpers shared by the corpus, dictionary and matcher modules. All
// character offsets exposed by the library count code points, not bytes.

namespace algomine::text {

// Decodes UTF-8. Invalid sequences decode to U+FFFD, one per offending byte,
// so decoding never fails and every input byte is accounted for.
std::u32string Decode(std::string_view utf8);

std::string Encode(std::u32string_view code_points);
void AppendUtf8(char32_t cp, std::string* out);

// Number of code points in a UTF-8 string (same counting rule as Decode).
std::size_t Length(std::string_view utf8);

// Letters and digits. Covers ASCII, Latin-1 Supplement, Latin Extended-A/B,
// Greek and Cyrillic; code points outside those blocks are not word
// characters.
bool IsAlnum(char32_t cp);
bool IsUpper(char32_t cp);
bool IsLower(char32_t cp);
bool IsSpace(char32_t cp);
// '-' plus U+2010 HYPHEN and U+2011 NON-BREAKING HYPHEN.
bool IsHyphen(char32_t cp);

// Simple one-to-one lowercase mapping over the blocks IsAlnum knows about.
char32_t ToLower(char32_t cp);

// Lowercases, collapses whitespace runs to one ASCII space and trims.
// This is the dictionary's storage form for canonical names and aliases.
std::string NormalizeName(std::string_view utf8);

// Collapses whitespace runs to a single space and trims both ends.
std::string CollapseWhitespace(std::string_view utf8);

// True when the text has at least one letter and no lowercase letter.
bool IsAllUppercase(std::u32string_view code_points);

std::vector<std::string> Split(std::string_view s, char delim);

}  // namespace algomine::text

#endif  // ALGOMINE_TEXT_H_
