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

#ifndef ALGOMINE_INFLUENCE_H_
#define ALGOMINE_INFLUENCE_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "algomine/corpus.h"
#include "algomine/dictionary.h"
#include "algomine/extract.h"

namespace algomine {

// (algorithm, year) -> distinct documents. A document counts once per
// algorithm and year no matter how many sentences mention it.
class MentionMatrix {
 public:
  // Unresolved records are skipped.
  static MentionMatrix FromRecords(const std::vector<MentionRecord>& records);

  void Add(const std::string& canonical, int year, const std::string& doc_id);

  std::int64_t Count(std::string_view canonical, int year) const;
  // Sum over years of Count().
  std::int64_t Total(std::string_view canonical) const;
  std::vector<std::string> Canonicals() const;
  // year -> N_ij for one algorithm; empty when it has no mentions.
  std::map<int, std::int64_t> Row(std::string_view canonical) const;

 private:
  std::map<std::string, std::map<int, std::set<std::string>>, std::less<>> cells_;
};

struct InfluenceSeries {
  std::string canonical;
  int first_year = 0;
  int end_year = 0;
  // Inclusive year count, end_year - first_year + 1.
  int duration = 0;
  // Every year in [first_year, end_year]; zero where nothing was mentioned.
  std::map<int, double> annual;
  std::map<int, std::int64_t> counts;  // years with N_ij > 0 only
  std::int64_t total_mentions = 0;
  double score = 0.0;

  std::vector<double> AnnualValues() const;
};

// annual[i] = N_ij / N_i and score = sum(annual) / duration. Throws
// InputError when the algorithm has no mentions up to end_year, a mention
// year has no publications in `totals`, or a mention lies after end_year.
InfluenceSeries ComputeInfluence(const MentionMatrix& matrix,
                                 const YearlyCounts& totals,
                                 std::string_view canonical, int end_year);

// All algorithms in the matrix, ordered by score (desc), then total mentions
// (desc), then name.
std::vector<InfluenceSeries> ComputeAllInfluence(const MentionMatrix& matrix,
                                                 const YearlyCounts& totals,
                                                 int end_year);

struct RankedAlgorithm {
  int rank = 0;  // 1-based
  std::string canonical;
  double annual = 0.0;
};

// Per year in [first_year, last_year]: algorithms mentioned that year by
// annual influence (desc), then total mentions (desc), then name; at most k.
// Years with no mentioned algorithm map to an empty list.
std::map<int, std::vector<RankedAlgorithm>> YearlyRankings(
    const std::vector<InfluenceSeries>& series, int k, int first_year,
    int last_year);

struct CategorySummary {
  Category category = Category::kOther;
  int member_count = 0;
  double mean_score = 0.0;
};

// Restricts `ranked` (ordered as ComputeAllInfluence returns) to its first
// top_n, groups by category (untagged -> other). Sorted by mean (desc),
// then member count (desc), then category name.
std::vector<CategorySummary> SummarizeCategories(
    const std::vector<InfluenceSeries>& ranked,
    const AlgorithmDictionary& dictionary, int top_n);

struct RisingSpan {
  int first_year = 0;
  int peak_year = 0;  // earliest year attaining the maximum
  int span = 0;       // peak_year - first_year
};

// Throws InputError when every annual value is zero.
RisingSpan ComputeRisingSpan(const InfluenceSeries& series);

enum class TrendLabel { kRapidGrowth, kSteadyGrowth, kSteadyDecline, kFlat };

std::string_view TrendLabelName(TrendLabel label);

struct TrendThresholds {
  double burst = 0.5;
  double growth_slope = 0.01;
  double decline_slope = -0.01;
};

struct TrendResult {
  TrendLabel label = TrendLabel::kFlat;
  double normalized_slope = 0.0;  // per year, after max-normalization
  double burst_score = 0.0;       // largest year-over-year rise
};

inline constexpr std::size_t kMinTrendYears = 3;

// Series ordered by year, one value per year. Throws InputError for fewer
// than kMinTrendYears values or a series without a positive value.
TrendResult ClassifyTrend(std::span<const double> annual,
                          const TrendThresholds& thresholds = {});

struct EraCounts {
  int year = 0;
  // Indexed by EraGroup.
  std::array<int, 4> counts{};
};

std::vector<EraCounts> CountEraGroups(
    const std::map<int, std::vector<RankedAlgorithm>>& rankings,
    const AlgorithmDictionary& dictionary);

}  // namespace algomine

#endif  // ALGOMINE_INFLUENCE_H_
