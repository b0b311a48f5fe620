// Serial vs OpenMP corpus scoring and Kendall tau counting.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>
#include <string>

#include "entmt/metaeval.hpp"
#include "entmt/metrics.hpp"

namespace {

using namespace entmt;

Segment random_segment(std::mt19937& rng, std::size_t len, std::size_t vocab) {
  std::uniform_int_distribution<std::size_t> word(0, vocab - 1);
  std::string text;
  for (std::size_t i = 0; i < len; ++i) text += "w" + std::to_string(word(rng)) + " ";
  return tokenize(text);
}

// Reference-like hypotheses: copy the reference, then perturb a few words.
ParallelCorpus make_corpus(std::size_t segments, std::size_t systems) {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<std::size_t> len(15, 35);
  ParallelCorpus c;
  for (std::size_t i = 0; i < segments; ++i) c.references.push_back(random_segment(rng, len(rng), 400));
  for (std::size_t s = 0; s < systems; ++s) {
    c.system_ids.push_back("sys" + std::to_string(s));
    std::vector<Segment> hyps;
    for (const auto& ref : c.references) {
      std::string text;
      for (std::size_t k = 0; k < ref.length(); ++k)
        text += (rng() % 4 == 0 ? "x" + std::to_string(rng() % 50) : ref[k].surface) + " ";
      hyps.push_back(tokenize(text));
    }
    c.hypotheses.push_back(std::move(hyps));
  }
  return c;
}

ScoringConfig all_metrics() {
  ScoringConfig config;
  for (auto k : {MetricKind::bleu, MetricKind::bleu_ent, MetricKind::meteor_lite, MetricKind::meteor_ent,
                 MetricKind::ent})
    config.metrics.push_back(MetricConfig::defaults(k));
  return config;
}

void BM_ScoreCorpusSerial(benchmark::State& state) {
  const auto corpus = make_corpus(static_cast<std::size_t>(state.range(0)), 4);
  const auto config = all_metrics();
  for (auto _ : state) benchmark::DoNotOptimize(score_corpus_serial(corpus, config));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 4);
}

void BM_ScoreCorpusOpenMP(benchmark::State& state) {
  const auto corpus = make_corpus(static_cast<std::size_t>(state.range(0)), 4);
  const auto config = all_metrics();
  for (auto _ : state) benchmark::DoNotOptimize(score_corpus(corpus, config));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 4);
  state.counters["threads"] = omp_get_max_threads();
}

struct TauInput {
  std::vector<PreferencePair> pairs;
  SegmentScores scores;
};

TauInput make_tau_input(std::size_t segments) {
  std::mt19937 rng(99);
  TauInput in;
  std::vector<RankingJudgment> js;
  for (std::size_t seg = 0; seg < segments; ++seg) {
    RankingJudgment j{seg, "", {}};
    for (int s = 0; s < 5; ++s) {
      std::string id = "s" + std::to_string(s);
      j.ranks.push_back({id, static_cast<int>(rng() % 5) + 1});
      in.scores[{seg, id}] = (rng() % 1000) / 1000.0;
    }
    js.push_back(std::move(j));
  }
  in.pairs = extract_pairs(js);
  return in;
}

void BM_KendallTauSerial(benchmark::State& state) {
  const auto in = make_tau_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kendall_tau_serial(in.pairs, in.scores));
}

void BM_KendallTauOpenMP(benchmark::State& state) {
  const auto in = make_tau_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kendall_tau(in.pairs, in.scores));
}

}  // namespace

BENCHMARK(BM_ScoreCorpusSerial)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScoreCorpusOpenMP)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KendallTauSerial)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KendallTauOpenMP)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
