// Serial reference vs OpenMP batch paths on a replicated fixture workload.
//
//   ./build/bench_parallel --benchmark_min_time=0.5
//   OMP_NUM_THREADS=4 ./build/bench_parallel

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "ejmt/regression.hpp"
#include "ejmt/transfer.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::shared_ptr<const ejmt::ResourceBundle> fixture_bundle() {
  const std::string f = EJMT_FIXTURES;
  static auto b = ejmt::ResourceBundle::load_files(
      {f + "/g0.grammar", f + "/l0.lexicon", f + "/t0.taxonomy", f + "/x0.xforms", f + "/c0.config"});
  return b;
}

// C0 plus longer PP chains, copied `reps` times under fresh ids.
std::vector<ejmt::CorpusCase> workload(int reps) {
  auto base = ejmt::load_corpus(slurp(std::string(EJMT_FIXTURES) + "/c0.tsv"));
  std::string chain = "The man watched the dog";
  const char* pps[] = {" in the park", " near the house", " on the hill", " by the river", " at the station",
                       " with the telescope"};
  for (int n = 0; n < 6; ++n) {
    chain += pps[n];
    base.push_back({"pp" + std::to_string(n), chain + ".", ""});
  }
  std::vector<ejmt::CorpusCase> out;
  for (int r = 0; r < reps; ++r) {
    for (auto c : base) {
      c.id += "_" + std::to_string(r);
      out.push_back(std::move(c));
    }
  }
  return out;
}

void BM_RunSuite(benchmark::State& state, ejmt::Execution execution) {
  auto b = fixture_bundle();
  auto cases = workload(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ejmt::run_suite(cases, b, execution));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(cases.size()));
}

void BM_TranslateSentences(benchmark::State& state, ejmt::Execution execution) {
  auto b = fixture_bundle();
  std::vector<std::string> sentences;
  for (const auto& c : workload(static_cast<int>(state.range(0)))) sentences.push_back(c.english);
  for (auto _ : state) benchmark::DoNotOptimize(ejmt::translate_sentences(sentences, b, {}, execution));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(sentences.size()));
}

}  // namespace

BENCHMARK_CAPTURE(BM_RunSuite, serial, ejmt::Execution::serial)->Arg(4)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RunSuite, openmp, ejmt::Execution::parallel)->Arg(4)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TranslateSentences, serial, ejmt::Execution::serial)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TranslateSentences, openmp, ejmt::Execution::parallel)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
