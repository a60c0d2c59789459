#include <benchmark/benchmark.h>

#include "cli/corpus.hpp"
#include "cli/generators.hpp"
#include "hcb/catO.hpp"
#include "hcb/hecke.hpp"
#include "hcb/serialize.hpp"

using namespace hcb;

namespace {

const char* const kGroups[] = {"A3", "B3", "D4", "A4", "F4"};

void BM_GenerateGroup(benchmark::State& state) {
  const auto d = build_root_system(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(generate_group(d));
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_GenerateGroup)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_KazhdanLusztigTable(benchmark::State& state) {
  const auto d = build_root_system(kGroups[state.range(0)]);
  const auto id = integral_datum(d, Weight::zero(d->rank()));
  for (auto _ : state) {
    const KLCache cache(id->w_int_ptr());
    benchmark::DoNotOptimize(cache.polynomial(0, id->w_int().longest_index()));
  }
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_KazhdanLusztigTable)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_IntegralDatum(benchmark::State& state) {
  const auto d = build_root_system("D4");
  const Weight lam = parse_weight("1/2,0,1/2,1/3");
  for (auto _ : state) benchmark::DoNotOptimize(integral_datum(d, lam));
}
BENCHMARK(BM_IntegralDatum)->Unit(benchmark::kMicrosecond);

void BM_Normalize(benchmark::State& state) {
  const auto id = integral_datum(build_root_system("D4"), parse_weight("1/2,0,1/2,1/2"));
  cli::Rng rng(1);
  std::vector<BimoduleWord> words;
  for (int k = 0; k < 256; ++k) words.push_back(cli::random_word(rng, id, static_cast<std::size_t>(state.range(0))));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normalize(words[k++ % words.size()]));
}
BENCHMARK(BM_Normalize)->Arg(12)->Arg(48);

void BM_Freudenthal(benchmark::State& state) {
  const auto d = build_root_system("B3");
  const Weight hw = Weight::from_integers({state.range(0), 1, state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(total_mass(*d, hw));
  state.counters["dim"] = static_cast<double>(weyl_dimension(*d, hw));
}
BENCHMARK(BM_Freudenthal)->Arg(1)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CorpusEntry(benchmark::State& state) {
  const auto entries = cli::parse_corpus_text(
      R"({"entries": [{"type": "B3", "lambda": ["0", "1/2", "0"], "mu": ["-1", "1/2", "0"]}]})");
  cli::RunOptions options;
  options.words_per_block = 100;
  for (auto _ : state) benchmark::DoNotOptimize(cli::run_corpus(entries, options));
}
BENCHMARK(BM_CorpusEntry)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
