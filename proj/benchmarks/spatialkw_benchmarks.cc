// Copyright 2026 The spatialkw Authors.
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

#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "spatialkw/spatialkw.h"

namespace spatialkw {
namespace {

std::vector<std::string> ZipfWords(std::size_t n, std::size_t vocab, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> weights(vocab);
  for (std::size_t k = 0; k < vocab; ++k) weights[k] = 1.0 / static_cast<double>(k + 1);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string w = "w";
    for (std::size_t k = pick(rng); k > 0; k /= 26) w += static_cast<char>('a' + k % 26);
    out.push_back(std::move(w));
  }
  return out;
}

Document ZipfDocument(std::size_t n, std::size_t chapters = 0) {
  const auto tokens = ZipfWords(n, n / 20 + 10, 1);
  std::vector<std::size_t> breaks;
  for (std::size_t c = 1; c < chapters; ++c) breaks.push_back(c * n / chapters);
  return Document::Build(tokens, breaks);
}

void BM_Tokenize(benchmark::State& state) {
  std::string text;
  for (const auto& w : ZipfWords(static_cast<std::size_t>(state.range(0)), 5000, 2)) {
    text += w;
    text += ", ";
  }
  TokenizerConfig config;
  config.stopwords = EnglishStopwords();
  for (auto _ : state) benchmark::DoNotOptimize(Tokenize(text, config));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_Tokenize)->Arg(10000)->Arg(100000);

void BM_BuildDocument(benchmark::State& state) {
  const auto tokens = ZipfWords(static_cast<std::size_t>(state.range(0)), 5000, 3);
  for (auto _ : state) benchmark::DoNotOptimize(Document::Build(tokens));
}
BENCHMARK(BM_BuildDocument)->Arg(100000);

void BM_Permute(benchmark::State& state) {
  const Document doc = ZipfDocument(static_cast<std::size_t>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(Permute(doc, seed++));
}
BENCHMARK(BM_Permute)->Arg(100000)->Arg(350000);

void BM_ScoreAll(benchmark::State& state) {
  const Document doc = ZipfDocument(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ScoreAll(doc, 7));
}
BENCHMARK(BM_ScoreAll)->Arg(100000)->Arg(350000)->Unit(benchmark::kMillisecond);

void BM_ChapterRanking(benchmark::State& state) {
  const Document doc = ZipfDocument(static_cast<std::size_t>(state.range(0)), 240);
  for (auto _ : state) benchmark::DoNotOptimize(RankByChapterScore(doc));
}
BENCHMARK(BM_ChapterRanking)->Arg(350000)->Unit(benchmark::kMillisecond);

void BM_LuhnExtract(benchmark::State& state) {
  const Document doc = ZipfDocument(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(LuhnExtract(doc, 282));
}
BENCHMARK(BM_LuhnExtract)->Arg(350000);

}  // namespace
}  // namespace spatialkw

BENCHMARK_MAIN();
