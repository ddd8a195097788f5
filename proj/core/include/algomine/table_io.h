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

#ifndef ALGOMINE_TABLE_IO_H_
#define ALGOMINE_TABLE_IO_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algomine/dictionary.h"
#include "algomine/extract.h"
#include "algomine/influence.h"

namespace algomine {

// Fixed-point with `digits` decimals ("%.6f" by default); never prints
// negative zero.
std::string FormatFixed(double value, int digits = 6);

// kNative writes every table in its own declared format (mentions,
// rankings and unresolved as TSV; the rest as CSV).
enum class OutputFormat { kNative, kTsv, kCsv, kJson };

std::optional<OutputFormat> ParseOutputFormat(std::string_view name);

struct Table {
  std::string name;  // file stem, e.g. "influence"
  bool native_tsv = false;
  std::vector<std::string> header;
  std::vector<bool> numeric;  // per column; JSON emits these unquoted
  std::vector<std::vector<std::string>> rows;
};

std::string TableFileName(const Table& table, OutputFormat format);
// Header row plus one line per row, '\n' terminated. TSV escapes '\\',
// tab, CR and LF as \\ \t \r \n; CSV quotes fields per RFC 4180; JSON is
// an array of objects keyed by the header.
std::string RenderTable(const Table& table, OutputFormat format);

Table MentionsTable(const std::vector<MentionRecord>& records);
Table UnresolvedTable(const std::vector<UnresolvedSummary>& unresolved);
Table InfluenceTable(const std::vector<InfluenceSeries>& ranked,
                     const AlgorithmDictionary& dictionary);
// Wide matrix, one column per year in [first_year, last_year], rows by name.
Table AnnualTable(const std::vector<InfluenceSeries>& series, int first_year,
                  int last_year);
Table RankingsTable(const std::map<int, std::vector<RankedAlgorithm>>& rankings);
// Series shorter than kMinTrendYears get empty label, slope and burst cells.
Table TrendsTable(const std::vector<InfluenceSeries>& series,
                  const TrendThresholds& thresholds = {});
Table CategoriesTable(const std::vector<CategorySummary>& summary);
Table EraCountsTable(const std::vector<EraCounts>& counts);

// Reads mentions.tsv back. Category and era tags are taken from
// `dictionary` when given.
std::vector<MentionRecord> ParseMentionsTsv(std::string_view content,
                                            std::string_view source = "<memory>",
                                            const AlgorithmDictionary* dictionary = nullptr);

struct OutputFile {
  std::string name;
  std::string content;
};

// Writes every file to a temporary name in `dir`, then renames them into
// place. If any write fails the temporaries are removed and nothing is
// renamed.
void WriteFilesAtomically(const std::filesystem::path& dir,
                          const std::vector<OutputFile>& files);

}  // namespace algomine

#endif  // ALGOMINE_TABLE_IO_H_
