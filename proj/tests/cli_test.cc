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

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "support/test_util.h"

namespace algomine::cli {
namespace {

namespace fs = std::filesystem;
using testing::DataDir;
using testing::TempDir;
using testing::WriteText;

using Outputs = std::map<std::string, std::string>;

std::string ReadFile(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outputs ReadDir(const fs::path& dir) {
  Outputs out;
  if (!fs::exists(dir)) return out;
  for (const auto& e : fs::directory_iterator(dir)) {
    out[e.path().filename().string()] = ReadFile(e.path());
  }
  return out;
}

RunConfig SampleConfig(const fs::path& out_dir) {
  RunConfig cfg;
  cfg.corpus = DataDir() / "sample_corpus.jsonl";
  cfg.dictionary = DataDir() / "seed_dictionary.json";
  cfg.out_dir = out_dir;
  return cfg;
}

Outputs RunOk(Command command, const RunConfig& cfg) {
  std::ostringstream err;
  const int rc = cli::Run(command, cfg, err);
  EXPECT_EQ(rc, 0) << err.str();
  return ReadDir(cfg.out_dir);
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::string JoinLines(const std::vector<std::string>& lines) {
  std::string out;
  for (const std::string& l : lines) out += l + "\n";
  return out;
}

int MainWith(std::vector<std::string> args) {
  args.insert(args.begin(), "algomine");
  std::vector<char*> argv;
  for (std::string& a : args) argv.push_back(a.data());
  return Main(static_cast<int>(argv.size()), argv.data());
}

TEST(CliTest, CommandNames) {
  EXPECT_EQ(ParseCommand("report"), Command::kReport);
  EXPECT_EQ(ParseCommand("check-dictionary"), Command::kCheckDictionary);
  EXPECT_FALSE(ParseCommand("frobnicate").has_value());
}

TEST(CliTest, ReportWritesEveryTable) {
  TempDir dir;
  const Outputs out = RunOk(Command::kReport, SampleConfig(dir / "out"));
  for (const char* name : {"mentions.tsv", "unresolved.tsv", "influence.csv", "annual.csv",
                           "categories.csv", "rankings.tsv", "era_counts.csv", "trends.csv"}) {
    EXPECT_TRUE(out.count(name)) << name;
  }
  EXPECT_EQ(out.size(), 8u);
}

TEST(CliTest, SubcommandsWriteTheirOwnTables) {
  TempDir dir;
  RunConfig cfg = SampleConfig(dir / "extract");
  EXPECT_EQ(RunOk(Command::kExtract, cfg).size(), 2u);
  cfg.out_dir = dir / "influence";
  EXPECT_EQ(RunOk(Command::kInfluence, cfg).size(), 3u);
  cfg.out_dir = dir / "rank";
  EXPECT_EQ(RunOk(Command::kRank, cfg).size(), 2u);
  cfg.out_dir = dir / "trends";
  EXPECT_EQ(RunOk(Command::kTrends, cfg).size(), 1u);
  cfg.out_dir = dir / "check";
  const Outputs check = RunOk(Command::kCheckDictionary, cfg);
  ASSERT_TRUE(check.count("dictionary_report.json"));
  EXPECT_NO_THROW(nlohmann::json::parse(check.at("dictionary_report.json")));
}

TEST(CliTest, JsonFormat) {
  TempDir dir;
  RunConfig cfg = SampleConfig(dir / "out");
  cfg.format = OutputFormat::kJson;
  const Outputs out = RunOk(Command::kReport, cfg);
  ASSERT_TRUE(out.count("influence.json"));
  const auto influence = nlohmann::json::parse(out.at("influence.json"));
  ASSERT_FALSE(influence.empty());
  EXPECT_TRUE(influence[0]["score"].is_number());
}

TEST(CliTest, InputErrorsExitOneAndWriteNothing) {
  TempDir dir;
  RunConfig cfg = SampleConfig(dir / "out");
  cfg.dictionary = dir / "missing.json";
  std::ostringstream err;
  EXPECT_EQ(cli::Run(Command::kReport, cfg, err), 1);
  EXPECT_NE(err.str().find("missing.json"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir / "out"));

  cfg = SampleConfig(dir / "out");
  cfg.top_k = 0;
  EXPECT_EQ(cli::Run(Command::kRank, cfg, err), 1);

  cfg = SampleConfig(dir / "out");
  cfg.corpus.clear();
  EXPECT_EQ(cli::Run(Command::kExtract, cfg, err), 1);

  cfg = SampleConfig(dir / "out");
  WriteText(dir / "bad.jsonl", "{\"doc_id\": \"X\", \"year\": 2001, \"sentences\": [\"ok\"]}\n{oops\n");
  cfg.corpus = dir / "bad.jsonl";
  EXPECT_EQ(cli::Run(Command::kReport, cfg, err), 1);
  EXPECT_FALSE(fs::exists(dir / "out"));
}

TEST(CliTest, LateDocumentsFailUnlessClipped) {
  TempDir dir;
  RunConfig cfg = SampleConfig(dir / "out");
  cfg.end_year = 2010;
  std::ostringstream err;
  EXPECT_EQ(cli::Run(Command::kReport, cfg, err), 1);
  EXPECT_NE(err.str().find("--clip-to-end-year"), std::string::npos);
  cfg.clip_to_end_year = true;
  const Outputs out = RunOk(Command::kReport, cfg);
  for (const std::string& line : Lines(out.at("rankings.tsv"))) {
    EXPECT_EQ(line.find("2013"), std::string::npos);
  }
}

TEST(CliTest, MainExitCodes) {
  TempDir dir;
  const std::string corpus = (DataDir() / "sample_corpus.jsonl").string();
  const std::string dict = (DataDir() / "seed_dictionary.json").string();
  const std::string out = (dir / "out").string();
  EXPECT_EQ(MainWith({"report", "--corpus", corpus, "--dictionary", dict, "--out-dir", out}), 0);
  EXPECT_EQ(MainWith({"frobnicate"}), 1);
  EXPECT_EQ(MainWith({"report", "--format", "xlsx"}), 1);
  EXPECT_EQ(MainWith({"report", "--corpus", corpus, "--out-dir", out}), 1);
}

TEST(CliTest, DeterministicAcrossRunsAndThreads) {
  TempDir dir;
  RunConfig cfg = SampleConfig(dir / "a");
  const Outputs first = RunOk(Command::kReport, cfg);
  cfg.out_dir = dir / "b";
  EXPECT_EQ(RunOk(Command::kReport, cfg), first);
  cfg.out_dir = dir / "c";
  cfg.threads = 4;
  EXPECT_EQ(RunOk(Command::kReport, cfg), first);
  cfg.out_dir = dir / "d";
  cfg.threads = 1;
  cfg.matcher = MatcherKind::kOracle;
  EXPECT_EQ(RunOk(Command::kReport, cfg), first);
}

TEST(CliTest, DocumentOrderDoesNotMatter) {
  TempDir dir;
  const Outputs base = RunOk(Command::kReport, SampleConfig(dir / "base"));
  std::vector<std::string> docs = Lines(ReadFile(DataDir() / "sample_corpus.jsonl"));
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(docs.begin(), docs.end(), rng);
    const fs::path shuffled = dir / ("shuffled" + std::to_string(trial) + ".jsonl");
    WriteText(shuffled, JoinLines(docs));
    RunConfig cfg = SampleConfig(dir / ("out" + std::to_string(trial)));
    cfg.corpus = shuffled;
    EXPECT_EQ(RunOk(Command::kReport, cfg), base);
  }
}

TEST(CliTest, RepeatedSentencesChangeNoAnalysisOutput) {
  TempDir dir;
  const Outputs base = RunOk(Command::kReport, SampleConfig(dir / "base"));
  std::string doubled;
  for (const std::string& line : Lines(ReadFile(DataDir() / "sample_corpus.jsonl"))) {
    nlohmann::json doc = nlohmann::json::parse(line);
    if (doc.contains("sentences")) {
      nlohmann::json twice = nlohmann::json::array();
      for (const auto& s : doc["sentences"]) {
        twice.push_back(s);
        twice.push_back(s);
      }
      doc["sentences"] = twice;
    } else {
      const std::string text = doc["text"];
      doc["text"] = text + " " + text;
    }
    doubled += doc.dump() + "\n";
  }
  WriteText(dir / "doubled.jsonl", doubled);
  RunConfig cfg = SampleConfig(dir / "doubled");
  cfg.corpus = dir / "doubled.jsonl";
  const Outputs out = RunOk(Command::kReport, cfg);
  EXPECT_NE(out.at("mentions.tsv"), base.at("mentions.tsv"));
  for (const char* name : {"influence.csv", "rankings.tsv", "trends.csv", "annual.csv",
                           "categories.csv", "era_counts.csv"}) {
    EXPECT_EQ(out.at(name), base.at(name)) << name;
  }
}

TEST(CliTest, AnalysisFromSavedMentionsMatchesReport) {
  TempDir dir;
  const Outputs base = RunOk(Command::kReport, SampleConfig(dir / "base"));
  RunConfig cfg = SampleConfig(dir / "reuse");
  cfg.mentions = dir / "base" / "mentions.tsv";
  const Outputs out = RunOk(Command::kReport, cfg);
  EXPECT_FALSE(out.count("mentions.tsv"));
  for (const auto& [name, content] : out) {
    ASSERT_TRUE(base.count(name)) << name;
    EXPECT_EQ(content, base.at(name)) << name;
  }
  EXPECT_EQ(out.size(), 6u);
}

TEST(CliTest, SavedMentionsMustMatchCorpus) {
  TempDir dir;
  WriteText(dir / "m.tsv",
            "doc_id\tyear\tsentence_index\tsection\tstart\tend\tsurface\talias\tcanonical\t"
            "resolution\nNOPE\t2001\t0\tbody\t0\t3\tSVM\tsvm\tsupport vector machine\tdirect\n");
  RunConfig cfg = SampleConfig(dir / "out");
  cfg.mentions = dir / "m.tsv";
  std::ostringstream err;
  EXPECT_EQ(cli::Run(Command::kInfluence, cfg, err), 1);
  EXPECT_NE(err.str().find("NOPE"), std::string::npos);
}

TEST(CliTest, TopKLimitsRowsPerYear) {
  TempDir dir;
  RunConfig cfg = SampleConfig(dir / "out");
  cfg.top_k = 2;
  const Outputs out = RunOk(Command::kRank, cfg);
  std::map<std::string, int> rows;
  const auto lines = Lines(out.at("rankings.tsv"));
  for (std::size_t i = 1; i < lines.size(); ++i) ++rows[lines[i].substr(0, lines[i].find('\t'))];
  ASSERT_FALSE(rows.empty());
  for (const auto& [year, n] : rows) EXPECT_LE(n, 2) << year;
  EXPECT_EQ(rows.at("2015"), 2);
}

TEST(CliTest, ConfigFileWithFlagOverride) {
  TempDir dir;
  WriteText(dir / "run.ini",
            "corpus = \"" + (DataDir() / "sample_corpus.jsonl").string() + "\"\n" +
                "dictionary = \"" + (DataDir() / "seed_dictionary.json").string() + "\"\n" +
                "top-k = 1\n");
  const std::string out1 = (dir / "one").string();
  const std::string out3 = (dir / "three").string();
  ASSERT_EQ(MainWith({"rank", "--config", (dir / "run.ini").string(), "--out-dir", out1}), 0);
  ASSERT_EQ(MainWith({"rank", "--config", (dir / "run.ini").string(), "--top-k", "3",
                      "--out-dir", out3}),
            0);
  const auto count_2015 = [](const std::string& rankings) {
    int n = 0;
    for (const std::string& l : Lines(rankings)) n += l.rfind("2015\t", 0) == 0;
    return n;
  };
  EXPECT_EQ(count_2015(ReadFile(fs::path(out1) / "rankings.tsv")), 1);
  EXPECT_EQ(count_2015(ReadFile(fs::path(out3) / "rankings.tsv")), 3);
}

TEST(CliTest, AgreementCommand) {
  TempDir dir;
  WriteText(dir / "a.tsv", "doc_id\tcanonical\nP01-1049\tsupport vector machine\nW02-1001\t\n");
  WriteText(dir / "b.tsv",
            "doc_id\tcanonical\nP01-1049\tsupport vector machine\nP01-1049\tnaive bayes\n"
            "W02-1001\texpectation maximization\n");
  RunConfig cfg = SampleConfig(dir / "out");
  cfg.annotator_a = dir / "a.tsv";
  cfg.annotator_b = dir / "b.tsv";
  const Outputs out = RunOk(Command::kAgreement, cfg);
  ASSERT_TRUE(out.count("agreement.json"));
  const auto report = nlohmann::json::parse(out.at("agreement.json"));
  for (const char* key : {"kappa", "p_o", "p_e", "missing_rate_a", "missing_rate_b",
                          "joint_missing_rate"}) {
    EXPECT_TRUE(report.contains(key)) << key;
  }
  EXPECT_GE(report["missing_rate_a"].get<double>(), report["joint_missing_rate"].get<double>());

  WriteText(dir / "c.tsv", "doc_id\tcanonical\nNOT-A-DOC\tsupport vector machine\n");
  cfg.annotator_a = cfg.annotator_b = dir / "c.tsv";
  cfg.out_dir = dir / "bad";
  std::ostringstream err;
  EXPECT_EQ(cli::Run(Command::kAgreement, cfg, err), 1);
}

}  // namespace
}  // namespace algomine::cli
