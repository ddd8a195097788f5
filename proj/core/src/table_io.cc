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

#include "algomine/table_io.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "algomine/error.h"
#include "algomine/text.h"
#include "json.hpp"

namespace algomine {
namespace {

constexpr std::string_view kMentionColumns[] = {
    "doc_id", "year",    "sentence_index", "section",   "start",
    "end",    "surface", "alias",          "canonical", "resolution"};

std::string EscapeTsv(std::string_view field) {
  std::string out;
  out.reserve(field.size());
  for (char c : field) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string UnescapeTsv(std::string_view field, const std::string& locus) {
  std::string out;
  out.reserve(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) {
    if (field[i] != '\\') {
      out.push_back(field[i]);
      continue;
    }
    if (++i == field.size()) throw InputError(locus + ": dangling escape");
    switch (field[i]) {
      case '\\': out.push_back('\\'); break;
      case 't': out.push_back('\t'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      default: throw InputError(locus + ": unknown escape '\\" + std::string(1, field[i]) + "'");
    }
  }
  return out;
}

std::string EscapeCsv(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

Table MakeTable(std::string name, bool native_tsv,
                std::vector<std::pair<std::string, bool>> columns) {
  Table t;
  t.name = std::move(name);
  t.native_tsv = native_tsv;
  for (auto& [col, numeric] : columns) {
    t.header.push_back(std::move(col));
    t.numeric.push_back(numeric);
  }
  return t;
}

int ParseInt(std::string_view s, const std::string& locus, const char* column) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(std::string(s), &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError(locus + ": bad integer in column " + column + ": '" + std::string(s) + "'");
}

}  // namespace

std::string FormatFixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  std::string s(buf);
  if (s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::optional<OutputFormat> ParseOutputFormat(std::string_view name) {
  if (name == "native") return OutputFormat::kNative;
  if (name == "tsv") return OutputFormat::kTsv;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  return std::nullopt;
}

std::string TableFileName(const Table& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::kNative: return table.name + (table.native_tsv ? ".tsv" : ".csv");
    case OutputFormat::kTsv: return table.name + ".tsv";
    case OutputFormat::kCsv: return table.name + ".csv";
    case OutputFormat::kJson: return table.name + ".json";
  }
  return table.name;
}

std::string RenderTable(const Table& table, OutputFormat format) {
  if (format == OutputFormat::kNative) {
    format = table.native_tsv ? OutputFormat::kTsv : OutputFormat::kCsv;
  }
  std::string out;
  if (format == OutputFormat::kJson) {
    out += "[";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      out += r == 0 ? "\n  {" : ",\n  {";
      const auto& row = table.rows[r];
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out += ", ";
        out += nlohmann::json(table.header[c]).dump() + ": ";
        if (table.numeric[c]) {
          out += row[c].empty() ? "null" : row[c];
        } else {
          out += nlohmann::json(row[c]).dump();
        }
      }
      out += "}";
    }
    out += table.rows.empty() ? "]\n" : "\n]\n";
    return out;
  }

  const bool tsv = format == OutputFormat::kTsv;
  auto emit = [&](const std::vector<std::string>& fields) {
    for (std::size_t c = 0; c < fields.size(); ++c) {
      if (c) out.push_back(tsv ? '\t' : ',');
      out += tsv ? EscapeTsv(fields[c]) : EscapeCsv(fields[c]);
    }
    out.push_back('\n');
  };
  emit(table.header);
  for (const auto& row : table.rows) emit(row);
  return out;
}

Table MentionsTable(const std::vector<MentionRecord>& records) {
  std::vector<std::pair<std::string, bool>> cols;
  for (std::string_view c : kMentionColumns) {
    const bool numeric = c == "year" || c == "sentence_index" || c == "start" || c == "end";
    cols.emplace_back(std::string(c), numeric);
  }
  Table t = MakeTable("mentions", true, std::move(cols));
  for (const MentionRecord& r : records) {
    t.rows.push_back({r.doc_id, std::to_string(r.year), std::to_string(r.sentence_index),
                      std::string(SectionName(r.section)), std::to_string(r.start),
                      std::to_string(r.end), r.surface, r.alias, r.canonical,
                      std::string(ResolutionName(r.resolution))});
  }
  return t;
}

Table UnresolvedTable(const std::vector<UnresolvedSummary>& unresolved) {
  Table t = MakeTable("unresolved", true,
                      {{"alias", false}, {"candidates", false},
                       {"mentions", true}, {"documents", true}});
  for (const UnresolvedSummary& u : unresolved) {
    std::string joined;
    for (const std::string& c : u.candidates) {
      if (!joined.empty()) joined += '|';
      joined += c;
    }
    t.rows.push_back({u.alias, joined, std::to_string(u.mentions), std::to_string(u.documents)});
  }
  return t;
}

Table InfluenceTable(const std::vector<InfluenceSeries>& ranked,
                     const AlgorithmDictionary& dictionary) {
  Table t = MakeTable("influence", false,
                      {{"canonical", false}, {"first_year", true}, {"T", true},
                       {"score", true}, {"category", false}, {"era_group", false}});
  for (const InfluenceSeries& s : ranked) {
    const AlgorithmEntry* e = dictionary.Find(s.canonical);
    const Category c = e ? e->category_or_other() : Category::kOther;
    const EraGroup g = e ? e->era_group_or_other() : EraGroup::kOther;
    t.rows.push_back({s.canonical, std::to_string(s.first_year), std::to_string(s.duration),
                      FormatFixed(s.score), std::string(CategoryName(c)),
                      std::string(EraGroupName(g))});
  }
  return t;
}

Table AnnualTable(const std::vector<InfluenceSeries>& series, int first_year,
                  int last_year) {
  std::vector<std::pair<std::string, bool>> cols = {{"canonical", false}};
  for (int y = first_year; y <= last_year; ++y) cols.emplace_back(std::to_string(y), true);
  Table t = MakeTable("annual", false, std::move(cols));

  std::vector<const InfluenceSeries*> sorted;
  for (const InfluenceSeries& s : series) sorted.push_back(&s);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto* a, const auto* b) { return a->canonical < b->canonical; });
  for (const InfluenceSeries* s : sorted) {
    std::vector<std::string> row = {s->canonical};
    for (int y = first_year; y <= last_year; ++y) {
      const auto it = s->annual.find(y);
      row.push_back(FormatFixed(it == s->annual.end() ? 0.0 : it->second));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table RankingsTable(const std::map<int, std::vector<RankedAlgorithm>>& rankings) {
  Table t = MakeTable("rankings", true,
                      {{"year", true}, {"rank", true}, {"canonical", false},
                       {"annual_influence", true}});
  for (const auto& [year, list] : rankings) {
    for (const RankedAlgorithm& r : list) {
      t.rows.push_back({std::to_string(year), std::to_string(r.rank), r.canonical,
                        FormatFixed(r.annual)});
    }
  }
  return t;
}

Table TrendsTable(const std::vector<InfluenceSeries>& series,
                  const TrendThresholds& thresholds) {
  Table t = MakeTable("trends", false,
                      {{"canonical", false}, {"label", false}, {"normalized_slope", true},
                       {"burst_score", true}, {"first_year", true}, {"peak_year", true},
                       {"span", true}});
  std::vector<const InfluenceSeries*> sorted;
  for (const InfluenceSeries& s : series) sorted.push_back(&s);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto* a, const auto* b) { return a->canonical < b->canonical; });
  for (const InfluenceSeries* s : sorted) {
    const RisingSpan span = ComputeRisingSpan(*s);
    std::vector<std::string> row = {s->canonical, "", "", ""};
    const std::vector<double> values = s->AnnualValues();
    if (values.size() >= kMinTrendYears) {
      const TrendResult trend = ClassifyTrend(values, thresholds);
      row[1] = std::string(TrendLabelName(trend.label));
      row[2] = FormatFixed(trend.normalized_slope);
      row[3] = FormatFixed(trend.burst_score);
    }
    row.push_back(std::to_string(span.first_year));
    row.push_back(std::to_string(span.peak_year));
    row.push_back(std::to_string(span.span));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table CategoriesTable(const std::vector<CategorySummary>& summary) {
  Table t = MakeTable("categories", false,
                      {{"category", false}, {"member_count", true}, {"mean_score", true}});
  for (const CategorySummary& c : summary) {
    t.rows.push_back({std::string(CategoryName(c.category)), std::to_string(c.member_count),
                      FormatFixed(c.mean_score)});
  }
  return t;
}

Table EraCountsTable(const std::vector<EraCounts>& counts) {
  Table t = MakeTable("era_counts", false,
                      {{"year", true}, {"syntactic", true}, {"traditional_ml", true},
                       {"deep_learning", true}, {"other", true}});
  for (const EraCounts& e : counts) {
    std::vector<std::string> row = {std::to_string(e.year)};
    for (int n : e.counts) row.push_back(std::to_string(n));
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<MentionRecord> ParseMentionsTsv(std::string_view content,
                                            std::string_view source,
                                            const AlgorithmDictionary* dictionary) {
  std::vector<MentionRecord> records;
  std::istringstream in{std::string(content)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string locus = std::string(source) + ":" + std::to_string(line_no);
    const std::vector<std::string> cols = text::Split(line, '\t');
    if (line_no == 1) {
      const bool ok = cols.size() == std::size(kMentionColumns) &&
                      std::equal(cols.begin(), cols.end(), std::begin(kMentionColumns));
      if (!ok) throw InputError(locus + ": not a mentions.tsv header");
      continue;
    }
    if (line.empty()) continue;
    if (cols.size() != std::size(kMentionColumns)) {
      throw InputError(locus + ": expected " + std::to_string(std::size(kMentionColumns)) +
                       " columns, found " + std::to_string(cols.size()));
    }
    MentionRecord r;
    r.doc_id = UnescapeTsv(cols[0], locus);
    r.year = ParseInt(cols[1], locus, "year");
    r.sentence_index = ParseInt(cols[2], locus, "sentence_index");
    r.section = ParseSection(cols[3]);
    r.start = ParseInt(cols[4], locus, "start");
    r.end = ParseInt(cols[5], locus, "end");
    r.surface = UnescapeTsv(cols[6], locus);
    r.alias = UnescapeTsv(cols[7], locus);
    r.canonical = UnescapeTsv(cols[8], locus);
    const auto resolution = ParseResolution(cols[9]);
    if (!resolution) throw InputError(locus + ": unknown resolution '" + cols[9] + "'");
    r.resolution = *resolution;
    if ((r.resolution == Resolution::kUnresolved) != r.canonical.empty()) {
      throw InputError(locus + ": canonical must be empty exactly when unresolved");
    }
    if (dictionary && !r.canonical.empty()) {
      const AlgorithmEntry* e = dictionary->Find(r.canonical);
      if (!e) throw InputError(locus + ": '" + r.canonical + "' is not in the dictionary");
      r.candidates = {r.canonical};
      r.category = e->category;
      r.era_group = e->era_group;
    }
    records.push_back(std::move(r));
  }
  if (line_no == 0) throw InputError(std::string(source) + ": empty mentions file");
  return records;
}

void WriteFilesAtomically(const std::filesystem::path& dir,
                          const std::vector<OutputFile>& files) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create output directory '" + dir.string() + "': " + ec.message());

  const std::string suffix = ".tmp." + std::to_string(::getpid());
  std::vector<fs::path> temps;
  auto cleanup = [&] {
    for (const fs::path& p : temps) fs::remove(p, ec);
  };
  for (const OutputFile& f : files) {
    const fs::path tmp = dir / ("." + f.name + suffix);
    temps.push_back(tmp);
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << f.content;
    out.close();
    if (!out) {
      cleanup();
      throw InputError("cannot write '" + tmp.string() + "'");
    }
  }
  for (std::size_t i = 0; i < files.size(); ++i) {
    fs::rename(temps[i], dir / files[i].name, ec);
    if (ec) {
      cleanup();
      throw InputError("cannot rename into '" + (dir / files[i].name).string() + "': " + ec.message());
    }
  }
}

}  // namespace algomine
