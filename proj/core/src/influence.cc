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

#include "algomine/influence.h"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "algomine/error.h"

namespace algomine {

MentionMatrix MentionMatrix::FromRecords(const std::vector<MentionRecord>& records) {
  MentionMatrix m;
  for (const MentionRecord& r : records) {
    if (r.resolution == Resolution::kUnresolved || r.canonical.empty()) continue;
    m.Add(r.canonical, r.year, r.doc_id);
  }
  return m;
}

void MentionMatrix::Add(const std::string& canonical, int year,
                        const std::string& doc_id) {
  cells_[canonical][year].insert(doc_id);
}

std::int64_t MentionMatrix::Count(std::string_view canonical, int year) const {
  const auto row = cells_.find(canonical);
  if (row == cells_.end()) return 0;
  const auto cell = row->second.find(year);
  return cell == row->second.end() ? 0 : static_cast<std::int64_t>(cell->second.size());
}

std::int64_t MentionMatrix::Total(std::string_view canonical) const {
  std::int64_t total = 0;
  for (const auto& [year, n] : Row(canonical)) total += n;
  return total;
}

std::vector<std::string> MentionMatrix::Canonicals() const {
  std::vector<std::string> names;
  names.reserve(cells_.size());
  for (const auto& [name, row] : cells_) names.push_back(name);
  return names;
}

std::map<int, std::int64_t> MentionMatrix::Row(std::string_view canonical) const {
  std::map<int, std::int64_t> row;
  const auto it = cells_.find(canonical);
  if (it == cells_.end()) return row;
  for (const auto& [year, docs] : it->second) {
    if (!docs.empty()) row[year] = static_cast<std::int64_t>(docs.size());
  }
  return row;
}

std::vector<double> InfluenceSeries::AnnualValues() const {
  std::vector<double> values;
  values.reserve(annual.size());
  for (const auto& [year, v] : annual) values.push_back(v);
  return values;
}

InfluenceSeries ComputeInfluence(const MentionMatrix& matrix,
                                 const YearlyCounts& totals,
                                 std::string_view canonical, int end_year) {
  const std::map<int, std::int64_t> row = matrix.Row(canonical);
  if (row.empty()) {
    throw InputError("algorithm '" + std::string(canonical) + "' has no mentions");
  }
  InfluenceSeries s;
  s.canonical = std::string(canonical);
  s.end_year = end_year;
  s.first_year = row.begin()->first;
  if (row.rbegin()->first > end_year) {
    throw InputError("algorithm '" + s.canonical + "' is mentioned in " +
                     std::to_string(row.rbegin()->first) + ", after end year " +
                     std::to_string(end_year));
  }
  s.duration = end_year - s.first_year + 1;
  for (int year = s.first_year; year <= end_year; ++year) s.annual[year] = 0.0;

  double sum = 0.0;
  for (const auto& [year, n] : row) {
    const auto total = totals.find(year);
    if (total == totals.end() || total->second <= 0) {
      throw InputError("algorithm '" + s.canonical + "' is mentioned in " +
                       std::to_string(year) + " but no publications are counted for that year");
    }
    if (n > total->second) {
      throw InvariantError("N_ij exceeds N_i for '" + s.canonical + "' in " +
                           std::to_string(year));
    }
    const double value = static_cast<double>(n) / static_cast<double>(total->second);
    s.annual[year] = value;
    s.counts[year] = n;
    s.total_mentions += n;
  }
  for (const auto& [year, value] : s.annual) sum += value;
  s.score = sum / static_cast<double>(s.duration);
  return s;
}

namespace {

bool RanksBefore(const InfluenceSeries& a, const InfluenceSeries& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.total_mentions != b.total_mentions) return a.total_mentions > b.total_mentions;
  return a.canonical < b.canonical;
}

}  // namespace

std::vector<InfluenceSeries> ComputeAllInfluence(const MentionMatrix& matrix,
                                                 const YearlyCounts& totals,
                                                 int end_year) {
  std::vector<InfluenceSeries> all;
  for (const std::string& name : matrix.Canonicals()) {
    all.push_back(ComputeInfluence(matrix, totals, name, end_year));
  }
  std::sort(all.begin(), all.end(), RanksBefore);
  return all;
}

std::map<int, std::vector<RankedAlgorithm>> YearlyRankings(
    const std::vector<InfluenceSeries>& series, int k, int first_year,
    int last_year) {
  if (k < 1) throw InputError("top-k must be >= 1");
  struct Row {
    const InfluenceSeries* series;
    double annual;
  };
  std::map<int, std::vector<Row>> by_year;
  for (int year = first_year; year <= last_year; ++year) by_year[year];
  for (const InfluenceSeries& s : series) {
    for (const auto& [year, n] : s.counts) {
      if (year < first_year || year > last_year || n <= 0) continue;
      by_year[year].push_back({&s, s.annual.at(year)});
    }
  }

  std::map<int, std::vector<RankedAlgorithm>> rankings;
  for (auto& [year, rows] : by_year) {
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
      if (a.annual != b.annual) return a.annual > b.annual;
      if (a.series->total_mentions != b.series->total_mentions) {
        return a.series->total_mentions > b.series->total_mentions;
      }
      return a.series->canonical < b.series->canonical;
    });
    auto& out = rankings[year];
    const std::size_t limit = std::min(rows.size(), static_cast<std::size_t>(k));
    for (std::size_t r = 0; r < limit; ++r) {
      out.push_back({static_cast<int>(r + 1), rows[r].series->canonical, rows[r].annual});
    }
  }
  return rankings;
}

std::vector<CategorySummary> SummarizeCategories(
    const std::vector<InfluenceSeries>& ranked,
    const AlgorithmDictionary& dictionary, int top_n) {
  if (top_n < 1) throw InputError("top-n must be >= 1");
  std::map<Category, std::pair<int, double>> groups;
  const std::size_t limit = std::min(ranked.size(), static_cast<std::size_t>(top_n));
  for (std::size_t i = 0; i < limit; ++i) {
    const AlgorithmEntry* entry = dictionary.Find(ranked[i].canonical);
    const Category c = entry ? entry->category_or_other() : Category::kOther;
    auto& [count, sum] = groups[c];
    ++count;
    sum += ranked[i].score;
  }
  std::vector<CategorySummary> out;
  for (const auto& [category, agg] : groups) {
    out.push_back({category, agg.first, agg.second / agg.first});
  }
  std::sort(out.begin(), out.end(), [](const CategorySummary& a, const CategorySummary& b) {
    if (a.mean_score != b.mean_score) return a.mean_score > b.mean_score;
    if (a.member_count != b.member_count) return a.member_count > b.member_count;
    return CategoryName(a.category) < CategoryName(b.category);
  });
  return out;
}

RisingSpan ComputeRisingSpan(const InfluenceSeries& series) {
  double peak = 0.0;
  int peak_year = 0;
  int first_year = 0;
  bool any = false;
  for (const auto& [year, value] : series.annual) {
    if (value <= 0.0) continue;
    if (!any) first_year = year;
    if (!any || value > peak) {
      peak = value;
      peak_year = year;
    }
    any = true;
  }
  if (!any) {
    throw InputError("rising span of '" + series.canonical + "' is undefined: all-zero series");
  }
  return {first_year, peak_year, peak_year - first_year};
}

std::string_view TrendLabelName(TrendLabel label) {
  switch (label) {
    case TrendLabel::kRapidGrowth: return "rapid_growth";
    case TrendLabel::kSteadyGrowth: return "steady_growth";
    case TrendLabel::kSteadyDecline: return "steady_decline";
    case TrendLabel::kFlat: return "flat";
  }
  return "flat";
}

TrendResult ClassifyTrend(std::span<const double> annual,
                          const TrendThresholds& thresholds) {
  const std::size_t n = annual.size();
  if (n < kMinTrendYears) {
    throw InputError("trend needs at least " + std::to_string(kMinTrendYears) +
                     " years, got " + std::to_string(n));
  }
  const double max = *std::max_element(annual.begin(), annual.end());
  if (!(max > 0.0) || !std::isfinite(max)) {
    throw InputError("trend needs a series with a positive maximum");
  }
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = annual[i] / max;

  const double x_mean = static_cast<double>(n - 1) / 2.0;
  double y_mean = 0.0;
  for (double v : y) y_mean += v;
  y_mean /= static_cast<double>(n);
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = static_cast<double>(i) - x_mean;
    sxy += dx * (y[i] - y_mean);
    sxx += dx * dx;
  }

  TrendResult result;
  result.normalized_slope = sxy / sxx;
  for (std::size_t i = 1; i < n; ++i) {
    result.burst_score = std::max(result.burst_score, y[i] - y[i - 1]);
  }

  const std::size_t third = n / 3;
  double head = 0.0;
  double tail = 0.0;
  for (std::size_t i = 0; i < third; ++i) {
    head += y[i];
    tail += y[n - third + i];
  }

  // The tolerance keeps mathematically equal thirds equal under rescaling.
  if (result.burst_score >= thresholds.burst && tail - head > 1e-9) {
    result.label = TrendLabel::kRapidGrowth;
  } else if (result.normalized_slope >= thresholds.growth_slope) {
    result.label = TrendLabel::kSteadyGrowth;
  } else if (result.normalized_slope <= thresholds.decline_slope) {
    result.label = TrendLabel::kSteadyDecline;
  } else {
    result.label = TrendLabel::kFlat;
  }
  return result;
}

std::vector<EraCounts> CountEraGroups(
    const std::map<int, std::vector<RankedAlgorithm>>& rankings,
    const AlgorithmDictionary& dictionary) {
  std::vector<EraCounts> out;
  for (const auto& [year, list] : rankings) {
    EraCounts row;
    row.year = year;
    for (const RankedAlgorithm& r : list) {
      const AlgorithmEntry* entry = dictionary.Find(r.canonical);
      const EraGroup g = entry ? entry->era_group_or_other() : EraGroup::kOther;
      ++row.counts[static_cast<int>(g)];
    }
    out.push_back(row);
  }
  return out;
}

}  // namespace algomine
