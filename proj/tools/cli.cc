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

#include "cli.h"

#include <iostream>
#include <set>
#include <unordered_map>

#include "CLI11.hpp"
#include "algomine/agreement.h"
#include "algomine/dictionary.h"
#include "algomine/error.h"

namespace algomine::cli {
namespace {

struct CommandName {
  Command command;
  const char* name;
  const char* help;
};

constexpr CommandName kCommands[] = {
    {Command::kExtract, "extract", "match the dictionary against the corpus; writes mentions + unresolved"},
    {Command::kInfluence, "influence", "influence scores, annual matrix and category summary"},
    {Command::kRank, "rank", "per-year top-k rankings and era-group counts"},
    {Command::kTrends, "trends", "trend classes and rising spans"},
    {Command::kAgreement, "agreement", "annotator agreement: Cohen's kappa and missing rates"},
    {Command::kReport, "report", "extract + influence + rank + trends in one run"},
    {Command::kCheckDictionary, "check-dictionary", "report ambiguous, short and stopword aliases"},
};

void Warn(std::ostream& err, const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) err << "algomine: warning: " << w << "\n";
}

void Require(const std::filesystem::path& path, const char* flag) {
  if (path.empty()) throw InputError(std::string(flag) + " is required for this command");
}

void ValidateConfig(const RunConfig& cfg) {
  if (cfg.top_k < 1) throw InputError("--top-k must be >= 1");
  if (cfg.top_n < 1) throw InputError("--top-n must be >= 1");
  if (cfg.end_year < cfg.min_year) throw InputError("--end-year is before --min-year");
  if (cfg.match.short_alias_threshold < 0) {
    throw InputError("--short-alias-threshold must be >= 0");
  }
}

// Lazily loaded inputs shared by the stages of one run.
class Pipeline {
 public:
  Pipeline(const RunConfig& cfg, std::ostream& err) : cfg_(cfg), err_(err) {}

  const AlgorithmDictionary& dictionary() {
    if (!dictionary_) {
      Require(cfg_.dictionary, "--dictionary");
      std::vector<std::string> warnings;
      dictionary_ = LoadDictionary(cfg_.dictionary, &warnings);
      Warn(err_, warnings);
    }
    return *dictionary_;
  }

  const std::vector<Document>& corpus() {
    if (!corpus_) {
      Require(cfg_.corpus, "--corpus");
      std::optional<SentenceSplitter> splitter;
      if (!cfg_.abbreviations.empty()) splitter = SentenceSplitter::FromFile(cfg_.abbreviations);
      CorpusOptions options;
      options.min_year = cfg_.min_year;
      options.max_year = cfg_.end_year;
      options.drop_late_documents = cfg_.clip_to_end_year;
      options.splitter = splitter ? &*splitter : nullptr;
      std::vector<std::string> warnings;
      try {
        corpus_ = LoadCorpus(cfg_.corpus, cfg_.corpus_format, options, &warnings);
      } catch (const InputError& e) {
        const std::string what = e.what();
        if (what.find("outside [") != std::string::npos && !cfg_.clip_to_end_year) {
          throw InputError(what + " (raise --end-year or pass --clip-to-end-year)");
        }
        throw;
      }
      Warn(err_, warnings);
      totals_ = ComputeYearlyCounts(*corpus_);
    }
    return *corpus_;
  }

  const YearlyCounts& totals() {
    corpus();
    return totals_;
  }

  const ExtractionResult& extraction() {
    if (!extraction_) {
      const auto& docs = corpus();
      const auto& dict = dictionary();
      ExtractOptions options;
      options.threads = cfg_.threads;
      if (cfg_.matcher == MatcherKind::kOracle) {
        const MatchConfig match = cfg_.match;
        extraction_ = ExtractCorpusMentions(
            docs, [&dict, match](const Sentence& s) { return OracleScan(dict, match, s); },
            dict, cfg_.policy, options);
      } else {
        const Matcher matcher = Matcher::Build(dict, cfg_.match);
        extraction_ = ExtractCorpusMentions(docs, matcher, dict, cfg_.policy, options);
      }
    }
    return *extraction_;
  }

  // Records from --mentions when given, otherwise from extraction.
  const std::vector<MentionRecord>& records() {
    if (cfg_.mentions.empty()) return extraction().records;
    if (!loaded_records_) {
      loaded_records_ = ParseMentionsTsv(ReadFile(cfg_.mentions), cfg_.mentions.string(),
                                         &dictionary());
      std::unordered_map<std::string, int> years;
      for (const Document& d : corpus()) years.emplace(d.doc_id, d.year);
      for (const MentionRecord& r : *loaded_records_) {
        const auto it = years.find(r.doc_id);
        if (it == years.end() || it->second != r.year) {
          throw InputError(cfg_.mentions.string() + ": mention of '" + r.doc_id +
                           "' does not match any corpus document and year");
        }
      }
    }
    return *loaded_records_;
  }

  const std::vector<InfluenceSeries>& series() {
    if (!series_) {
      const MentionMatrix matrix = MentionMatrix::FromRecords(records());
      series_ = ComputeAllInfluence(matrix, totals(), cfg_.end_year);
    }
    return *series_;
  }

  int first_year() {
    return totals().empty() ? cfg_.end_year + 1 : totals().begin()->first;
  }

  std::map<int, std::vector<RankedAlgorithm>> rankings() {
    auto ranked = YearlyRankings(series(), cfg_.top_k, first_year(), cfg_.end_year);
    std::erase_if(ranked, [this](const auto& kv) { return !totals().count(kv.first); });
    return ranked;
  }

 private:
  const RunConfig& cfg_;
  std::ostream& err_;
  std::optional<AlgorithmDictionary> dictionary_;
  std::optional<std::vector<Document>> corpus_;
  YearlyCounts totals_;
  std::optional<ExtractionResult> extraction_;
  std::optional<std::vector<MentionRecord>> loaded_records_;
  std::optional<std::vector<InfluenceSeries>> series_;
};

void AddTable(const Table& table, OutputFormat format, std::vector<OutputFile>* files) {
  files->push_back({TableFileName(table, format), RenderTable(table, format)});
}

void ExtractOutputs(Pipeline& p, const RunConfig& cfg, std::vector<OutputFile>* files) {
  const ExtractionResult& result = p.extraction();
  AddTable(MentionsTable(result.records), cfg.format, files);
  AddTable(UnresolvedTable(result.unresolved), cfg.format, files);
}

void InfluenceOutputs(Pipeline& p, const RunConfig& cfg, std::vector<OutputFile>* files) {
  const auto& series = p.series();
  AddTable(InfluenceTable(series, p.dictionary()), cfg.format, files);
  AddTable(AnnualTable(series, p.first_year(), cfg.end_year), cfg.format, files);
  AddTable(CategoriesTable(SummarizeCategories(series, p.dictionary(), cfg.top_n)),
           cfg.format, files);
}

void RankOutputs(Pipeline& p, const RunConfig& cfg, std::vector<OutputFile>* files) {
  const auto rankings = p.rankings();
  AddTable(RankingsTable(rankings), cfg.format, files);
  AddTable(EraCountsTable(CountEraGroups(rankings, p.dictionary())), cfg.format, files);
}

void TrendOutputs(Pipeline& p, const RunConfig& cfg, std::vector<OutputFile>* files) {
  AddTable(TrendsTable(p.series(), cfg.trend), cfg.format, files);
}

void AgreementOutputs(Pipeline& p, const RunConfig& cfg, std::vector<OutputFile>* files) {
  Require(cfg.annotator_a, "--annotator-a");
  Require(cfg.annotator_b, "--annotator-b");
  const AlgorithmDictionary* dict = cfg.dictionary.empty() ? nullptr : &p.dictionary();
  const AnnotationSet a = LoadAnnotations(cfg.annotator_a, dict);
  const AnnotationSet b = LoadAnnotations(cfg.annotator_b, dict);
  const AnnotationSet merged = MergeAnnotations(a, b);

  AnnotationSet gold;
  if (!cfg.gold.empty()) {
    gold = LoadAnnotations(cfg.gold, dict);
    if (gold.Documents() != merged.Documents()) {
      throw InputError(cfg.gold.string() + ": gold covers a different document sample");
    }
  } else {
    std::set<std::string> corpus_ids;
    for (const Document& d : p.corpus()) corpus_ids.insert(d.doc_id);
    for (const std::string& doc : merged.Documents()) {
      if (!corpus_ids.count(doc)) {
        throw InputError("annotated document '" + doc + "' is not in the corpus");
      }
    }
    gold = BackfillFromMentions(merged, p.extraction().records);
  }
  files->push_back({"agreement.json", AgreementReportJson(ComputeAgreement(a, b, gold))});
}

}  // namespace

std::optional<Command> ParseCommand(std::string_view name) {
  for (const CommandName& c : kCommands) {
    if (name == c.name) return c.command;
  }
  return std::nullopt;
}

int Run(Command command, const RunConfig& cfg, std::ostream& err) {
  try {
    ValidateConfig(cfg);
    Pipeline p(cfg, err);
    std::vector<OutputFile> files;
    switch (command) {
      case Command::kExtract:
        ExtractOutputs(p, cfg, &files);
        break;
      case Command::kInfluence:
        InfluenceOutputs(p, cfg, &files);
        break;
      case Command::kRank:
        RankOutputs(p, cfg, &files);
        break;
      case Command::kTrends:
        TrendOutputs(p, cfg, &files);
        break;
      case Command::kAgreement:
        AgreementOutputs(p, cfg, &files);
        break;
      case Command::kReport:
        if (cfg.mentions.empty()) ExtractOutputs(p, cfg, &files);
        InfluenceOutputs(p, cfg, &files);
        RankOutputs(p, cfg, &files);
        TrendOutputs(p, cfg, &files);
        break;
      case Command::kCheckDictionary:
        files.push_back({"dictionary_report.json",
                         ValidationReportJson(ValidateDictionary(
                             p.dictionary(), cfg.match.short_alias_threshold))});
        break;
    }
    WriteFilesAtomically(cfg.out_dir, files);
    return 0;
  } catch (const InputError& e) {
    err << "algomine: error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantError& e) {
    err << "algomine: internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "algomine: internal error: " << e.what() << "\n";
    return 2;
  }
}

int Main(int argc, char** argv) {
  CLI::App app{"algomine: algorithm-mention extraction and influence analytics"};
  app.set_config("--config", "", "TOML/INI config file; command-line flags take precedence");
  app.require_subcommand(1, 1);

  RunConfig cfg;
  std::string corpus_format = "jsonl";
  std::string policy = "drop";
  std::string format = "native";
  std::string matcher = "automaton";

  app.add_option("--corpus", cfg.corpus, "corpus file");
  app.add_option("--corpus-format", corpus_format, "jsonl or xml")
      ->check(CLI::IsMember({"jsonl", "xml"}));
  app.add_option("--dictionary", cfg.dictionary, "dictionary file (.json or TSV)");
  app.add_option("--abbreviations", cfg.abbreviations,
                 "extra non-splitting abbreviations for the sentence splitter");
  app.add_option("--min-year", cfg.min_year, "earliest accepted publication year");
  app.add_option("--end-year", cfg.end_year, "analysis end year");
  app.add_flag("--clip-to-end-year", cfg.clip_to_end_year,
               "drop documents after --end-year instead of failing");
  app.add_option("--top-k", cfg.top_k, "rankings per year");
  app.add_option("--top-n", cfg.top_n, "algorithms in the category summary");
  app.add_flag("--case-fold,!--no-case-fold", cfg.match.case_fold, "case-insensitive matching");
  app.add_flag("--hyphen-space,!--no-hyphen-space", cfg.match.hyphen_space_equiv,
               "treat hyphens as spaces when matching");
  app.add_option("--short-alias-threshold", cfg.match.short_alias_threshold,
                 "aliases this short or shorter are guarded");
  app.add_flag("--short-alias-uppercase,!--no-short-alias-uppercase",
               cfg.match.short_alias_requires_uppercase,
               "short aliases match only fully uppercase surfaces");
  app.add_option("--unresolved-policy", policy, "drop, keep or assign-unique")
      ->check(CLI::IsMember({"drop", "keep", "assign-unique"}));
  app.add_option("--burst-threshold", cfg.trend.burst, "rapid-growth burst threshold");
  app.add_option("--growth-slope", cfg.trend.growth_slope, "steady-growth slope threshold");
  app.add_option("--decline-slope", cfg.trend.decline_slope, "steady-decline slope threshold");
  app.add_option("--out-dir", cfg.out_dir, "output directory");
  app.add_option("--format", format, "tsv, csv or json (default: each file's native format)")
      ->check(CLI::IsMember({"native", "tsv", "csv", "json"}));
  app.add_option("--mentions", cfg.mentions, "reuse a mentions.tsv instead of re-extracting");
  app.add_option("--annotator-a", cfg.annotator_a, "first annotator's labels (TSV)");
  app.add_option("--annotator-b", cfg.annotator_b, "second annotator's labels (TSV)");
  app.add_option("--gold", cfg.gold, "gold labels (TSV); default: merged + dictionary backfill");
  app.add_option("--matcher", matcher, "automaton or oracle (brute force)")
      ->check(CLI::IsMember({"automaton", "oracle"}));
  app.add_option("--threads", cfg.threads, "worker threads for extraction");

  for (const CommandName& c : kCommands) {
    app.add_subcommand(c.name, c.help)->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  cfg.corpus_format = *ParseCorpusFormat(corpus_format);
  cfg.policy.unresolved_action = *ParseUnresolvedAction(policy);
  cfg.format = *ParseOutputFormat(format);
  cfg.matcher = matcher == "oracle" ? MatcherKind::kOracle : MatcherKind::kAutomaton;

  const auto command = ParseCommand(app.get_subcommands().front()->get_name());
  return Run(*command, cfg, std::cerr);
}

}  // namespace algomine::cli
