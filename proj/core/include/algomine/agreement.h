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

#ifndef ALGOMINE_AGREEMENT_H_
#define ALGOMINE_AGREEMENT_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algomine/dictionary.h"
#include "algomine/extract.h"

namespace algomine {

using LabelPair = std::pair<std::string, std::string>;  // (doc_id, canonical)

// doc_id -> canonical names labeled present. A document may map to an empty
// set; it still belongs to the annotated sample.
struct AnnotationSet {
  std::map<std::string, std::set<std::string>> labels;

  std::set<std::string> Documents() const;
  std::set<LabelPair> Pairs() const;
  bool Contains(const LabelPair& pair) const;
  void Add(const std::string& doc_id, const std::string& canonical);

  friend bool operator==(const AnnotationSet&, const AnnotationSet&) = default;
};

// Per-document union. Throws InputError when the document samples differ.
AnnotationSet MergeAnnotations(const AnnotationSet& a, const AnnotationSet& b);

// Adds every resolved extraction record whose document is in the sample:
// the dictionary backfill that turns merged labels into a gold standard.
AnnotationSet BackfillFromMentions(const AnnotationSet& merged,
                                   const std::vector<MentionRecord>& records);

// |gold pairs absent from annot| / |gold pairs|. Throws InputError for an
// empty gold standard.
double MissingRate(const AnnotationSet& annot, const AnnotationSet& gold);

// Fraction of gold pairs missed by both annotators.
double JointMissingRate(const AnnotationSet& a, const AnnotationSet& b,
                        const AnnotationSet& gold);

// 2x2 contingency table over a universe of (doc, algorithm) pairs:
//   a = both yes, b = first yes / second no, c = first no / second yes,
//   d = both no.
struct AgreementTable {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;
  double p_o = 0.0;
  double p_e = 0.0;
  double kappa = 0.0;

  std::int64_t n() const { return a + b + c + d; }
};

// Cohen's kappa from counts, evaluated in exact integer arithmetic up to the
// final division. p_e == 1 (both raters constant and equal) yields kappa 1;
// throws InputError for n == 0.
AgreementTable AgreementFromCounts(std::int64_t a, std::int64_t b,
                                   std::int64_t c, std::int64_t d);

// Throws InputError for an empty universe or a labeled pair outside it.
AgreementTable BuildAgreementTable(const AnnotationSet& first,
                                   const AnnotationSet& second,
                                   const std::set<LabelPair>& universe);

double CohensKappa(const AnnotationSet& first, const AnnotationSet& second,
                   const std::set<LabelPair>& universe);

// Sample documents x algorithms observed in any of the given sets.
std::set<LabelPair> AgreementUniverse(const std::vector<const AnnotationSet*>& sets);

// TSV with columns doc_id, canonical; an optional "doc_id<TAB>canonical"
// header; a line with an empty canonical declares an unlabeled document.
// When `dictionary` is given, unknown canonicals are rejected.
AnnotationSet ParseAnnotationsTsv(std::string_view content,
                                  std::string_view source = "<memory>",
                                  const AlgorithmDictionary* dictionary = nullptr);
AnnotationSet LoadAnnotations(const std::filesystem::path& path,
                              const AlgorithmDictionary* dictionary = nullptr);

struct AgreementReport {
  double kappa = 0.0;
  double p_o = 0.0;
  double p_e = 0.0;
  double missing_rate_a = 0.0;
  double missing_rate_b = 0.0;
  double joint_missing_rate = 0.0;
};

AgreementReport ComputeAgreement(const AnnotationSet& a, const AnnotationSet& b,
                                 const AnnotationSet& gold);

// {"kappa", "p_o", "p_e", "missing_rate_a", "missing_rate_b",
//  "joint_missing_rate"}, six decimals, fixed key order.
std::string AgreementReportJson(const AgreementReport& report);

}  // namespace algomine

#endif  // ALGOMINE_AGREEMENT_H_
