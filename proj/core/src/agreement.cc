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

#include "algomine/agreement.h"

#include <sstream>

#include "algomine/corpus.h"
#include "algomine/error.h"
#include "algomine/table_io.h"
#include "algomine/text.h"

namespace algomine {

std::set<std::string> AnnotationSet::Documents() const {
  std::set<std::string> docs;
  for (const auto& [doc, names] : labels) docs.insert(doc);
  return docs;
}

std::set<LabelPair> AnnotationSet::Pairs() const {
  std::set<LabelPair> pairs;
  for (const auto& [doc, names] : labels) {
    for (const std::string& name : names) pairs.emplace(doc, name);
  }
  return pairs;
}

bool AnnotationSet::Contains(const LabelPair& pair) const {
  const auto it = labels.find(pair.first);
  return it != labels.end() && it->second.count(pair.second) > 0;
}

void AnnotationSet::Add(const std::string& doc_id, const std::string& canonical) {
  auto& names = labels[doc_id];
  if (!canonical.empty()) names.insert(canonical);
}

AnnotationSet MergeAnnotations(const AnnotationSet& a, const AnnotationSet& b) {
  if (a.Documents() != b.Documents()) {
    throw InputError("annotation sets cover different document samples");
  }
  AnnotationSet merged = a;
  for (const auto& [doc, names] : b.labels) {
    merged.labels[doc].insert(names.begin(), names.end());
  }
  return merged;
}

AnnotationSet BackfillFromMentions(const AnnotationSet& merged,
                                   const std::vector<MentionRecord>& records) {
  AnnotationSet gold = merged;
  for (const MentionRecord& r : records) {
    if (r.canonical.empty() || r.resolution == Resolution::kUnresolved) continue;
    const auto it = gold.labels.find(r.doc_id);
    if (it != gold.labels.end()) it->second.insert(r.canonical);
  }
  return gold;
}

double MissingRate(const AnnotationSet& annot, const AnnotationSet& gold) {
  const std::set<LabelPair> pairs = gold.Pairs();
  if (pairs.empty()) throw InputError("missing rate needs a non-empty gold standard");
  std::int64_t missing = 0;
  for (const LabelPair& p : pairs) {
    if (!annot.Contains(p)) ++missing;
  }
  return static_cast<double>(missing) / static_cast<double>(pairs.size());
}

double JointMissingRate(const AnnotationSet& a, const AnnotationSet& b,
                        const AnnotationSet& gold) {
  const std::set<LabelPair> pairs = gold.Pairs();
  if (pairs.empty()) throw InputError("missing rate needs a non-empty gold standard");
  std::int64_t missing = 0;
  for (const LabelPair& p : pairs) {
    if (!a.Contains(p) && !b.Contains(p)) ++missing;
  }
  return static_cast<double>(missing) / static_cast<double>(pairs.size());
}

AgreementTable AgreementFromCounts(std::int64_t a, std::int64_t b, std::int64_t c,
                                   std::int64_t d) {
  if (a < 0 || b < 0 || c < 0 || d < 0) throw InputError("negative agreement count");
  AgreementTable t{a, b, c, d};
  const std::int64_t n = t.n();
  if (n == 0) throw InputError("agreement universe is empty");
  const std::int64_t observed = a + d;
  const std::int64_t expected = (a + b) * (a + c) + (c + d) * (b + d);  // p_e * n^2
  const std::int64_t n2 = n * n;
  t.p_o = static_cast<double>(observed) / static_cast<double>(n);
  t.p_e = static_cast<double>(expected) / static_cast<double>(n2);
  if (expected == n2) {
    if (observed != n) {
      throw InputError("kappa undefined: chance agreement is 1 but observed agreement is not");
    }
    t.kappa = 1.0;
    return t;
  }
  t.kappa = static_cast<double>(observed * n - expected) /
            static_cast<double>(n2 - expected);
  return t;
}

AgreementTable BuildAgreementTable(const AnnotationSet& first,
                                   const AnnotationSet& second,
                                   const std::set<LabelPair>& universe) {
  if (universe.empty()) throw InputError("agreement universe is empty");
  for (const AnnotationSet* set : {&first, &second}) {
    for (const LabelPair& p : set->Pairs()) {
      if (!universe.count(p)) {
        throw InputError("labeled pair (" + p.first + ", " + p.second +
                         ") is outside the agreement universe");
      }
    }
  }
  std::int64_t a = 0, b = 0, c = 0, d = 0;
  for (const LabelPair& p : universe) {
    const bool x = first.Contains(p);
    const bool y = second.Contains(p);
    if (x && y) {
      ++a;
    } else if (x) {
      ++b;
    } else if (y) {
      ++c;
    } else {
      ++d;
    }
  }
  return AgreementFromCounts(a, b, c, d);
}

double CohensKappa(const AnnotationSet& first, const AnnotationSet& second,
                   const std::set<LabelPair>& universe) {
  return BuildAgreementTable(first, second, universe).kappa;
}

std::set<LabelPair> AgreementUniverse(const std::vector<const AnnotationSet*>& sets) {
  std::set<std::string> docs;
  std::set<std::string> algorithms;
  for (const AnnotationSet* s : sets) {
    for (const auto& [doc, names] : s->labels) {
      docs.insert(doc);
      algorithms.insert(names.begin(), names.end());
    }
  }
  std::set<LabelPair> universe;
  for (const std::string& doc : docs) {
    for (const std::string& name : algorithms) universe.emplace(doc, name);
  }
  return universe;
}

AnnotationSet ParseAnnotationsTsv(std::string_view content, std::string_view source,
                                  const AlgorithmDictionary* dictionary) {
  AnnotationSet set;
  std::istringstream in{std::string(content)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> cols = text::Split(line, '\t');
    const std::string locus = std::string(source) + ":" + std::to_string(line_no);
    if (cols.size() > 2) throw InputError(locus + ": expected 2 columns");
    const std::string doc = text::CollapseWhitespace(cols[0]);
    const std::string name = cols.size() > 1 ? text::NormalizeName(cols[1]) : "";
    if (line_no == 1 && doc == "doc_id" && name == "canonical") continue;
    if (doc.empty()) throw InputError(locus + ": empty doc_id");
    if (!name.empty() && dictionary && !dictionary->Find(name)) {
      throw InputError(locus + ": '" + name + "' is not in the dictionary");
    }
    set.Add(doc, name);
  }
  return set;
}

AnnotationSet LoadAnnotations(const std::filesystem::path& path,
                              const AlgorithmDictionary* dictionary) {
  return ParseAnnotationsTsv(ReadFile(path), path.string(), dictionary);
}

AgreementReport ComputeAgreement(const AnnotationSet& a, const AnnotationSet& b,
                                 const AnnotationSet& gold) {
  const std::set<LabelPair> universe = AgreementUniverse({&a, &b, &gold});
  const AgreementTable t = BuildAgreementTable(a, b, universe);
  AgreementReport r;
  r.kappa = t.kappa;
  r.p_o = t.p_o;
  r.p_e = t.p_e;
  r.missing_rate_a = MissingRate(a, gold);
  r.missing_rate_b = MissingRate(b, gold);
  r.joint_missing_rate = JointMissingRate(a, b, gold);
  return r;
}

std::string AgreementReportJson(const AgreementReport& r) {
  std::ostringstream out;
  out << "{\n"
      << "  \"kappa\": " << FormatFixed(r.kappa) << ",\n"
      << "  \"p_o\": " << FormatFixed(r.p_o) << ",\n"
      << "  \"p_e\": " << FormatFixed(r.p_e) << ",\n"
      << "  \"missing_rate_a\": " << FormatFixed(r.missing_rate_a) << ",\n"
      << "  \"missing_rate_b\": " << FormatFixed(r.missing_rate_b) << ",\n"
      << "  \"joint_missing_rate\": " << FormatFixed(r.joint_missing_rate) << "\n"
      << "}\n";
  return out.str();
}

}  // namespace algomine
