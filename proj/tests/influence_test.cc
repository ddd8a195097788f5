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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "algomine/error.h"

namespace algomine {
namespace {

// One resolved mention: (doc_id, year, canonical).
using Hit = std::tuple<std::string, int, std::string>;

struct Fixture {
  std::vector<std::pair<std::string, int>> docs;  // (doc_id, year)
  std::vector<Hit> hits;
};

std::vector<MentionRecord> Records(const std::vector<Hit>& hits) {
  std::vector<MentionRecord> out;
  int k = 0;
  for (const auto& [doc, year, canonical] : hits) {
    MentionRecord r;
    r.doc_id = doc;
    r.year = year;
    r.sentence_index = k++;
    r.canonical = canonical;
    r.resolution = Resolution::kDirect;
    out.push_back(r);
  }
  return out;
}

YearlyCounts Totals(const Fixture& f) {
  std::vector<Document> docs;
  for (const auto& [id, year] : f.docs) docs.push_back({id, year, "", {}});
  return ComputeYearlyCounts(docs);
}

// Direct evaluation of the score by nested loops over the raw fixture.
double OracleScore(const Fixture& f, const std::string& canonical, int end_year) {
  int first = end_year + 1;
  for (const auto& [doc, year, name] : f.hits) {
    if (name == canonical) first = std::min(first, year);
  }
  double sum = 0.0;
  for (int year = first; year <= end_year; ++year) {
    int published = 0;
    for (const auto& d : f.docs) published += d.second == year;
    std::vector<std::string> seen;
    for (const auto& [doc, y, name] : f.hits) {
      if (name == canonical && y == year &&
          std::find(seen.begin(), seen.end(), doc) == seen.end()) {
        seen.push_back(doc);
      }
    }
    if (!seen.empty()) sum += static_cast<double>(seen.size()) / published;
  }
  return sum / (end_year - first + 1);
}

InfluenceSeries Score(const Fixture& f, const std::string& canonical, int end_year) {
  return ComputeInfluence(MentionMatrix::FromRecords(Records(f.hits)), Totals(f), canonical,
                          end_year);
}

Fixture RandomFixture(std::mt19937_64& rng, int docs, int algorithms) {
  Fixture f;
  std::uniform_int_distribution<int> year(1995, 2015);
  for (int d = 0; d < docs; ++d) f.docs.push_back({"d" + std::to_string(d), year(rng)});
  std::uniform_int_distribution<int> pick_doc(0, docs - 1);
  std::uniform_int_distribution<int> pick_alg(0, algorithms - 1);
  const int hits = docs * 3;
  for (int h = 0; h < hits; ++h) {
    const auto& [id, y] = f.docs[pick_doc(rng)];
    f.hits.emplace_back(id, y, "alg" + std::to_string(pick_alg(rng)));
  }
  return f;
}

TEST(InfluenceTest, WorkedExample) {
  const Fixture f{{{"a", 2000}, {"b", 2000}, {"c", 2001}, {"d", 2001}, {"e", 2001}, {"f", 2001}},
                  {{"a", 2000, "x"}, {"c", 2001, "x"}, {"d", 2001, "x"}}};
  const InfluenceSeries s = Score(f, "x", 2001);
  EXPECT_EQ(s.first_year, 2000);
  EXPECT_EQ(s.duration, 2);
  EXPECT_EQ(s.annual, (std::map<int, double>{{2000, 0.5}, {2001, 0.5}}));
  EXPECT_NEAR(s.score, 0.5, 1e-12);
  EXPECT_NEAR(s.score, OracleScore(f, "x", 2001), 1e-12);
  EXPECT_EQ(s.total_mentions, 3);
}

TEST(InfluenceTest, AlgorithmFirstSeenInEndYear) {
  const Fixture f{{{"a", 2015}, {"b", 2015}, {"c", 2014}},
                  {{"a", 2015, "adadelta"}, {"b", 2015, "adadelta"}}};
  const InfluenceSeries s = Score(f, "adadelta", 2015);
  EXPECT_EQ(s.duration, 1);
  EXPECT_EQ(s.score, 1.0);
}

TEST(InfluenceTest, ConstantShareScoresThatShare) {
  Fixture f;
  for (int year = 2010; year <= 2015; ++year) {
    for (int d = 0; d < 4; ++d) {
      const std::string id = std::to_string(year) + "-" + std::to_string(d);
      f.docs.push_back({id, year});
      if (d == 0) f.hits.emplace_back(id, year, "x");
    }
  }
  EXPECT_NEAR(Score(f, "x", 2015).score, 0.25, 1e-12);
}

TEST(InfluenceTest, GapsAreZeroFilled) {
  const Fixture f{{{"a", 2000}, {"b", 2003}}, {{"a", 2000, "x"}}};
  const InfluenceSeries s = Score(f, "x", 2005);
  EXPECT_EQ(s.annual.size(), 6u);
  EXPECT_EQ(s.annual.at(2003), 0.0);
  EXPECT_NEAR(s.score, 1.0 / 6.0, 1e-12);
  EXPECT_EQ(s.AnnualValues().size(), 6u);
}

TEST(InfluenceTest, Errors) {
  const Fixture f{{{"a", 2000}}, {{"a", 2000, "x"}, {"zz", 1999, "y"}, {"a", 2000, "late"}}};
  const auto matrix = MentionMatrix::FromRecords(Records(f.hits));
  EXPECT_THROW(ComputeInfluence(matrix, Totals(f), "absent", 2015), InputError);
  EXPECT_THROW(ComputeInfluence(matrix, Totals(f), "y", 2015), InputError);
  EXPECT_THROW(ComputeInfluence(matrix, Totals(f), "x", 1999), InputError);
}

TEST(InfluenceTest, ArticleIsTheCountingUnit) {
  Fixture f{{{"a", 2005}, {"b", 2005}}, {}};
  for (int i = 0; i < 10; ++i) f.hits.emplace_back("a", 2005, "svm");
  auto matrix = MentionMatrix::FromRecords(Records(f.hits));
  EXPECT_EQ(matrix.Count("svm", 2005), 1);
  f.hits.emplace_back("b", 2005, "svm");
  matrix = MentionMatrix::FromRecords(Records(f.hits));
  EXPECT_EQ(matrix.Count("svm", 2005), 2);
  EXPECT_EQ(matrix.Total("svm"), 2);
  EXPECT_EQ(matrix.Count("svm", 2006), 0);
  EXPECT_EQ(matrix.Count("other", 2005), 0);
}

TEST(InfluenceTest, UnresolvedRecordsAreNotCounted) {
  auto records = Records({{"a", 2000, "x"}, {"b", 2000, ""}});
  records[1].resolution = Resolution::kUnresolved;
  const auto matrix = MentionMatrix::FromRecords(records);
  EXPECT_EQ(matrix.Canonicals(), (std::vector<std::string>{"x"}));
}

TEST(InfluenceTest, ScoresMatchDirectSummation) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const Fixture f = RandomFixture(rng, 40, 8);
    const auto all = ComputeAllInfluence(MentionMatrix::FromRecords(Records(f.hits)),
                                         Totals(f), 2015);
    ASSERT_FALSE(all.empty());
    for (const InfluenceSeries& s : all) {
      EXPECT_NEAR(s.score, OracleScore(f, s.canonical, 2015), 1e-12);
      EXPECT_GE(s.duration, 1);
      EXPECT_GE(s.score, 0.0);
      EXPECT_LE(s.score, 1.0);
      double peak = 0.0;
      for (const auto& [year, v] : s.annual) {
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0);
        peak = std::max(peak, v);
      }
      EXPECT_LE(s.score, peak + 1e-15);
      if (s.first_year == 2015) EXPECT_EQ(s.score, s.annual.at(2015));
    }
    for (std::size_t i = 1; i < all.size(); ++i) {
      EXPECT_GE(all[i - 1].score, all[i].score);
    }
  }
}

TEST(InfluenceTest, DuplicatedMentionsChangeNothing) {
  std::mt19937_64 rng(23);
  const Fixture f = RandomFixture(rng, 30, 6);
  Fixture doubled = f;
  for (const Hit& h : f.hits) doubled.hits.push_back(h);
  const auto a = ComputeAllInfluence(MentionMatrix::FromRecords(Records(f.hits)), Totals(f), 2015);
  const auto b = ComputeAllInfluence(MentionMatrix::FromRecords(Records(doubled.hits)),
                                     Totals(doubled), 2015);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].canonical, b[i].canonical);
    EXPECT_EQ(a[i].score, b[i].score);
    EXPECT_EQ(a[i].annual, b[i].annual);
    EXPECT_EQ(a[i].total_mentions, b[i].total_mentions);
  }
}

std::vector<std::string> Names(const std::vector<RankedAlgorithm>& list) {
  std::vector<std::string> out;
  for (const RankedAlgorithm& r : list) out.push_back(r.canonical);
  return out;
}

TEST(RankingTest, YearWithSevenAlgorithmsHasSevenRows) {
  Fixture f{{{"a", 1979}, {"b", 1979}, {"c", 1980}}, {}};
  for (int i = 0; i < 7; ++i) f.hits.emplace_back("a", 1979, "alg" + std::to_string(i));
  for (int i = 0; i < 12; ++i) f.hits.emplace_back("c", 1980, "new" + std::to_string(i));
  const auto series = ComputeAllInfluence(MentionMatrix::FromRecords(Records(f.hits)),
                                          Totals(f), 1980);
  const auto rankings = YearlyRankings(series, 10, 1979, 1980);
  EXPECT_EQ(rankings.at(1979).size(), 7u);
  EXPECT_EQ(rankings.at(1980).size(), 10u);
  for (std::size_t i = 0; i < rankings.at(1979).size(); ++i) {
    EXPECT_EQ(rankings.at(1979)[i].rank, static_cast<int>(i + 1));
  }
}

TEST(RankingTest, OrderedByAnnualInfluence) {
  const Fixture f{{{"a", 2000}, {"b", 2000}, {"c", 2000}, {"d", 2000}},
                  {{"a", 2000, "A"}, {"b", 2000, "A"}, {"c", 2000, "B"}}};
  const auto series = ComputeAllInfluence(MentionMatrix::FromRecords(Records(f.hits)),
                                          Totals(f), 2000);
  const auto rankings = YearlyRankings(series, 10, 2000, 2000);
  EXPECT_EQ(Names(rankings.at(2000)), (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(rankings.at(2000)[0].annual, 0.5);
  EXPECT_EQ(rankings.at(2000)[1].annual, 0.25);
}

TEST(RankingTest, TiesBreakOnTotalsThenName) {
  const Fixture f{{{"a", 2000}, {"b", 2001}},
                  {{"a", 2000, "zeta"}, {"a", 2000, "alpha"}, {"a", 2000, "mid"},
                   {"b", 2001, "mid"}}};
  const auto series = ComputeAllInfluence(MentionMatrix::FromRecords(Records(f.hits)),
                                          Totals(f), 2001);
  for (int run = 0; run < 3; ++run) {
    const auto rankings = YearlyRankings(series, 10, 2000, 2001);
    EXPECT_EQ(Names(rankings.at(2000)), (std::vector<std::string>{"mid", "alpha", "zeta"}));
  }
  auto reversed = series;
  std::reverse(reversed.begin(), reversed.end());
  EXPECT_EQ(Names(YearlyRankings(reversed, 10, 2000, 2001).at(2000)),
            (std::vector<std::string>{"mid", "alpha", "zeta"}));
}

TEST(RankingTest, KLimitsAndEmptyYears) {
  const Fixture f{{{"a", 2000}}, {{"a", 2000, "x"}, {"a", 2000, "y"}}};
  const auto series = ComputeAllInfluence(MentionMatrix::FromRecords(Records(f.hits)),
                                          Totals(f), 2002);
  const auto rankings = YearlyRankings(series, 1, 2000, 2002);
  EXPECT_EQ(rankings.size(), 3u);
  EXPECT_EQ(rankings.at(2000).size(), 1u);
  EXPECT_TRUE(rankings.at(2001).empty());
  EXPECT_THROW(YearlyRankings(series, 0, 2000, 2002), InputError);
}

TEST(RankingTest, AlgorithmFreeDocumentsKeepWithinYearOrder) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const Fixture f = RandomFixture(rng, 40, 8);
    Fixture padded = f;
    const int year = f.docs[0].second;
    for (int i = 0; i < 7; ++i) padded.docs.push_back({"empty" + std::to_string(i), year});
    const auto a = ComputeAllInfluence(MentionMatrix::FromRecords(Records(f.hits)), Totals(f), 2015);
    const auto b = ComputeAllInfluence(MentionMatrix::FromRecords(Records(padded.hits)),
                                       Totals(padded), 2015);
    const auto ra = YearlyRankings(a, 10, 1995, 2015);
    const auto rb = YearlyRankings(b, 10, 1995, 2015);
    EXPECT_EQ(Names(ra.at(year)), Names(rb.at(year)));
    const auto totals = Totals(f);
    const double factor = static_cast<double>(totals.at(year)) / (totals.at(year) + 7);
    for (std::size_t i = 0; i < ra.at(year).size(); ++i) {
      EXPECT_NEAR(rb.at(year)[i].annual, ra.at(year)[i].annual * factor, 1e-12);
    }
  }
}

InfluenceSeries Scored(std::string name, double score) {
  InfluenceSeries s;
  s.canonical = std::move(name);
  s.score = score;
  return s;
}

AlgorithmEntry Tagged(std::string name, std::optional<Category> c,
                      std::optional<EraGroup> g = std::nullopt) {
  AlgorithmEntry e;
  e.canonical = std::move(name);
  e.category = c;
  e.era_group = g;
  return e;
}

TEST(CategoryTest, HandComputedMeans) {
  const auto dict = AlgorithmDictionary::Create({
      Tagged("a", Category::kClassification), Tagged("b", Category::kClassification),
      Tagged("c", Category::kMetric), Tagged("d", std::nullopt)});
  const std::vector<InfluenceSeries> ranked = {Scored("c", 0.5), Scored("a", 0.4),
                                               Scored("b", 0.2), Scored("d", 0.1)};
  auto summary = SummarizeCategories(ranked, dict, 100);
  ASSERT_EQ(summary.size(), 3u);
  EXPECT_EQ(summary[0].category, Category::kMetric);
  EXPECT_EQ(summary[0].member_count, 1);
  EXPECT_DOUBLE_EQ(summary[0].mean_score, 0.5);
  EXPECT_EQ(summary[1].category, Category::kClassification);
  EXPECT_EQ(summary[1].member_count, 2);
  EXPECT_NEAR(summary[1].mean_score, 0.3, 1e-15);
  EXPECT_EQ(summary[2].category, Category::kOther);
  EXPECT_DOUBLE_EQ(summary[2].mean_score, 0.1);

  summary = SummarizeCategories(ranked, dict, 2);
  ASSERT_EQ(summary.size(), 2u);
  EXPECT_DOUBLE_EQ(summary[1].mean_score, 0.4);
  EXPECT_THROW(SummarizeCategories(ranked, dict, 0), InputError);
}

TEST(CategoryTest, MatchesBruteForceAverage) {
  std::mt19937_64 rng(8);
  std::vector<AlgorithmEntry> entries;
  std::vector<InfluenceSeries> ranked;
  std::uniform_int_distribution<int> cat(0, kCategoryCount - 1);
  std::uniform_real_distribution<double> score(0.0, 1.0);
  for (int i = 0; i < 60; ++i) {
    const std::string name = "alg" + std::to_string(i);
    entries.push_back(Tagged(name, static_cast<Category>(cat(rng))));
    ranked.push_back(Scored(name, score(rng)));
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const auto& a, const auto& b) { return a.score > b.score; });
  const auto dict = AlgorithmDictionary::Create(entries);
  const int top_n = 25;
  const auto summary = SummarizeCategories(ranked, dict, top_n);
  int members = 0;
  for (const CategorySummary& c : summary) {
    double sum = 0.0;
    int count = 0;
    for (int i = 0; i < top_n; ++i) {
      if (dict.Find(ranked[i].canonical)->category == c.category) {
        sum += ranked[i].score;
        ++count;
      }
    }
    EXPECT_EQ(c.member_count, count);
    EXPECT_NEAR(c.mean_score, sum / count, 1e-12);
    members += c.member_count;
  }
  EXPECT_EQ(members, top_n);
  for (std::size_t i = 1; i < summary.size(); ++i) {
    EXPECT_GE(summary[i - 1].mean_score, summary[i].mean_score);
  }
}

InfluenceSeries Series(int first_year, const std::vector<double>& values) {
  InfluenceSeries s;
  s.canonical = "x";
  s.first_year = first_year;
  for (std::size_t i = 0; i < values.size(); ++i) {
    s.annual[first_year + static_cast<int>(i)] = values[i];
  }
  s.end_year = first_year + static_cast<int>(values.size()) - 1;
  return s;
}

TEST(RisingSpanTest, TableSixArithmetic) {
  std::vector<double> growing;
  for (int year = 1984; year <= 2015; ++year) growing.push_back(0.01 * (year - 1983));
  const RisingSpan nn = ComputeRisingSpan(Series(1984, growing));
  EXPECT_EQ(nn.first_year, 1984);
  EXPECT_EQ(nn.peak_year, 2015);
  EXPECT_EQ(nn.span, 31);

  const RisingSpan ada = ComputeRisingSpan(Series(2015, {0.02}));
  EXPECT_EQ(ada.peak_year, 2015);
  EXPECT_EQ(ada.span, 0);
}

TEST(RisingSpanTest, EarliestPeakWins) {
  const RisingSpan r = ComputeRisingSpan(Series(2008, {0.1, 0.2, 0.4, 0.3, 0.4, 0.1}));
  EXPECT_EQ(r.peak_year, 2010);
  EXPECT_EQ(r.span, 2);
}

TEST(RisingSpanTest, LeadingZerosAreSkipped) {
  const RisingSpan r = ComputeRisingSpan(Series(2000, {0.0, 0.0, 0.3, 0.2}));
  EXPECT_EQ(r.first_year, 2002);
  EXPECT_EQ(r.span, 0);
  EXPECT_THROW(ComputeRisingSpan(Series(2000, {0.0, 0.0})), InputError);
}

TEST(RisingSpanTest, ZeroExactlyWhenPeakIsFirstNonzeroYear) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> level(0, 4);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> v(1 + rng() % 12);
    for (double& x : v) x = 0.1 * level(rng);
    if (std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; })) continue;
    const RisingSpan r = ComputeRisingSpan(Series(1990, v));
    EXPECT_GE(r.span, 0);
    EXPECT_GE(r.peak_year, r.first_year);
    const auto first = std::find_if(v.begin(), v.end(), [](double x) { return x > 0.0; });
    const bool peak_first = *first == *std::max_element(v.begin(), v.end());
    EXPECT_EQ(r.span == 0, peak_first);
  }
}

TEST(TrendTest, ReferenceShapes) {
  std::vector<double> rising;
  std::vector<double> falling;
  std::vector<double> step(15, 0.0);
  for (int i = 1; i <= 20; ++i) {
    rising.push_back(i);
    falling.push_back(21 - i);
  }
  step.insert(step.end(), 5, 1.0);
  EXPECT_EQ(ClassifyTrend(rising).label, TrendLabel::kSteadyGrowth);
  EXPECT_EQ(ClassifyTrend(falling).label, TrendLabel::kSteadyDecline);
  const TrendResult burst = ClassifyTrend(step);
  EXPECT_EQ(burst.label, TrendLabel::kRapidGrowth);
  EXPECT_DOUBLE_EQ(burst.burst_score, 1.0);
  EXPECT_EQ(ClassifyTrend(std::vector<double>{0.3, 0.3, 0.3, 0.3}).label, TrendLabel::kFlat);
}

TEST(TrendTest, SlopeOfNormalizedSeries) {
  // 1..20 normalized by 20 rises by 0.05 per year.
  std::vector<double> rising;
  for (int i = 1; i <= 20; ++i) rising.push_back(i);
  const TrendResult r = ClassifyTrend(rising);
  EXPECT_NEAR(r.normalized_slope, 0.05, 1e-12);
  EXPECT_NEAR(r.burst_score, 0.05, 1e-12);
}

TEST(TrendTest, BurstNeedsLaterMass) {
  // A single spike in the middle is a burst but not a rise.
  const TrendResult r = ClassifyTrend(std::vector<double>{0, 0, 0, 1, 0, 0, 0});
  EXPECT_DOUBLE_EQ(r.burst_score, 1.0);
  EXPECT_NE(r.label, TrendLabel::kRapidGrowth);
}

TEST(TrendTest, ThresholdsAreConfigurable) {
  const std::vector<double> mild = {1.0, 1.01, 1.02, 1.03, 1.04};
  EXPECT_EQ(ClassifyTrend(mild).label, TrendLabel::kFlat);
  TrendThresholds loose;
  loose.growth_slope = 0.001;
  EXPECT_EQ(ClassifyTrend(mild, loose).label, TrendLabel::kSteadyGrowth);
}

TEST(TrendTest, Errors) {
  EXPECT_THROW(ClassifyTrend(std::vector<double>{1.0, 2.0}), InputError);
  EXPECT_THROW(ClassifyTrend(std::vector<double>{0.0, 0.0, 0.0}), InputError);
}

TEST(TrendTest, LabelInvariantUnderPositiveScaling) {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> value(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<double> v(3 + rng() % 25);
    for (double& x : v) x = (rng() % 4 == 0) ? 0.0 : value(rng);
    v[rng() % v.size()] += 0.01;
    for (double factor : {7.3, 0.001, 1e6}) {
      std::vector<double> scaled;
      for (double x : v) scaled.push_back(x * factor);
      EXPECT_EQ(ClassifyTrend(v).label, ClassifyTrend(scaled).label) << factor;
    }
  }
}

TEST(EraTest, UntaggedCountsAsOther) {
  const auto dict = AlgorithmDictionary::Create({Tagged("a", std::nullopt), Tagged("b", std::nullopt)});
  std::map<int, std::vector<RankedAlgorithm>> rankings;
  rankings[2000] = {{1, "a", 0.5}, {2, "b", 0.1}};
  rankings[2001] = {};
  const auto counts = CountEraGroups(rankings, dict);
  ASSERT_EQ(counts.size(), 2u);
  EXPECT_EQ(counts[0].counts, (std::array<int, 4>{0, 0, 0, 2}));
  EXPECT_EQ(counts[1].counts, (std::array<int, 4>{0, 0, 0, 0}));
}

TEST(EraTest, MatchesEnumeration) {
  const auto dict = AlgorithmDictionary::Create({
      Tagged("atn", Category::kGrammar, EraGroup::kSyntactic),
      Tagged("cfg", Category::kGrammar, EraGroup::kSyntactic),
      Tagged("svm", Category::kClassification, EraGroup::kTraditionalMl),
      Tagged("hmm", Category::kProbabilisticGraphicalModel, EraGroup::kTraditionalMl),
      Tagged("lstm", Category::kNeuralNetwork, EraGroup::kDeepLearning),
  });
  const Fixture f{{{"a", 1996}, {"b", 1997}, {"c", 1998}},
                  {{"a", 1996, "atn"}, {"a", 1996, "cfg"}, {"a", 1996, "svm"},
                   {"b", 1997, "cfg"}, {"b", 1997, "svm"}, {"b", 1997, "hmm"},
                   {"c", 1998, "svm"}, {"c", 1998, "lstm"}}};
  const auto series = ComputeAllInfluence(MentionMatrix::FromRecords(Records(f.hits)),
                                          Totals(f), 1998);
  const auto rankings = YearlyRankings(series, 10, 1996, 1998);
  const auto counts = CountEraGroups(rankings, dict);
  ASSERT_EQ(counts.size(), 3u);
  for (const EraCounts& row : counts) {
    std::array<int, 4> expected{};
    for (const auto& [doc, year, name] : f.hits) {
      if (year == row.year) ++expected[static_cast<int>(*dict.Find(name)->era_group)];
    }
    EXPECT_EQ(row.counts, expected) << row.year;
  }
  EXPECT_EQ(counts[1].counts, (std::array<int, 4>{1, 2, 0, 0}));
}

}  // namespace
}  // namespace algomine
