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

#ifndef ALGOMINE_TOOLS_CLI_H_
#define ALGOMINE_TOOLS_CLI_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "algomine/corpus.h"
#include "algomine/extract.h"
#include "algomine/influence.h"
#include "algomine/matcher.h"
#include "algomine/table_io.h"

namespace algomine::cli {

enum class Command {
  kExtract,
  kInfluence,
  kRank,
  kTrends,
  kAgreement,
  kReport,
  kCheckDictionary,
};

std::optional<Command> ParseCommand(std::string_view name);

enum class MatcherKind { kAutomaton, kOracle };

struct RunConfig {
  std::filesystem::path corpus;
  CorpusFormat corpus_format = CorpusFormat::kJsonl;
  std::filesystem::path dictionary;
  std::filesystem::path abbreviations;  // extra splitter abbreviations
  int min_year = 1900;
  int end_year = 2015;
  // Drop documents after end_year (with a warning) instead of failing.
  bool clip_to_end_year = false;
  int top_k = 10;
  int top_n = 100;
  MatchConfig match;
  DisambiguationPolicy policy;
  TrendThresholds trend;
  std::filesystem::path out_dir = "out";
  OutputFormat format = OutputFormat::kNative;
  // Precomputed mentions.tsv; replaces extraction for the analysis stages.
  std::filesystem::path mentions;
  // agreement inputs; gold defaults to merged labels backfilled by
  // extraction over the corpus.
  std::filesystem::path annotator_a;
  std::filesystem::path annotator_b;
  std::filesystem::path gold;
  MatcherKind matcher = MatcherKind::kAutomaton;
  unsigned threads = 1;
};

// Runs one command. Exit status: 0 success, 1 input validation error,
// 2 internal invariant violation. Diagnostics go to `err`; all data goes to
// files under config.out_dir, written only after every output is computed.
int Run(Command command, const RunConfig& config, std::ostream& err);

// Parses argv (flags and an optional --config file; flags win) and runs.
int Main(int argc, char** argv);

}  // namespace algomine::cli

#endif  // ALGOMINE_TOOLS_CLI_H_
