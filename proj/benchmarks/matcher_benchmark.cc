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


#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "algomine/corpus.h"
#include "algomine/dictionary.h"
#include "algomine/extract.h"
#include "algomine/matcher.h"

namespace algomine {
namespace {

const std::filesystem::path kDataDir = std::filesystem::path(ALGOMINE_SOURCE_DIR) / "data";

const AlgorithmDictionary& Dictionary() {
  static const AlgorithmDictionary dict = LoadDictionary(kDataDir / "seed_dictionary.json");
  return dict;
}

const std::vector<Document>& SampleCorpus() {
  static const std::vector<Document> corpus =
      LoadCorpus(kDataDir / "sample_corpus.jsonl", CorpusFormat::kJsonl);
  return corpus;
}

// Sample sentences, shuffled and repeated to `count`.
std::vector<Sentence> Sentences(std::size_t count) {
  std::vector<Sentence> pool;
  for (const Document& d : SampleCorpus()) {
    pool.insert(pool.end(), d.sentences.begin(), d.sentences.end());
  }
  std::mt19937_64 rng(1);
  std::vector<Sentence> out;
  out.reserve(count);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (std::size_t i = 0; i < count; ++i) out.push_back(pool[pick(rng)]);
  return out;
}

void BM_MatcherBuild(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(Matcher::Build(Dictionary()));
  }
}
BENCHMARK(BM_MatcherBuild);

void BM_AutomatonScan(benchmark::State& state) {
  const Matcher m = Matcher::Build(Dictionary());
  const auto sentences = Sentences(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const Sentence& s : sentences) benchmark::DoNotOptimize(m.FindMentions(s));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AutomatonScan)->Arg(1000)->Arg(10000);

void BM_OracleScan(benchmark::State& state) {
  const MatchConfig cfg;
  const auto sentences = Sentences(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const Sentence& s : sentences) benchmark::DoNotOptimize(OracleScan(Dictionary(), cfg, s));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_OracleScan)->Arg(1000);

void BM_SegmentSentences(benchmark::State& state) {
  std::string text;
  for (const Sentence& s : Sentences(static_cast<std::size_t>(state.range(0)))) {
    text += s.text;
    text += ' ';
  }
  for (auto _ : state) benchmark::DoNotOptimize(SegmentSentences(text));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_SegmentSentences)->Arg(1000);

void BM_ExtractCorpus(benchmark::State& state) {
  const Matcher m = Matcher::Build(Dictionary());
  std::vector<Document> corpus;
  for (int copy = 0; copy < 50; ++copy) {
    for (Document d : SampleCorpus()) {
      d.doc_id += "-" + std::to_string(copy);
      corpus.push_back(std::move(d));
    }
  }
  ExtractOptions options;
  options.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExtractCorpusMentions(corpus, m, Dictionary(), {}, options));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size()));
}
BENCHMARK(BM_ExtractCorpus)->Arg(1)->Arg(4);

}  // namespace
}  // namespace algomine

BENCHMARK_MAIN();
