#include <benchmark/benchmark.h>

#include <vector>

#include "skipvec/extract.hpp"
#include "skipvec/knn.hpp"
#include "skipvec/ntriples.hpp"
#include "skipvec/pipeline.hpp"
#include "skipvec/selection.hpp"
#include "skipvec/synthetic.hpp"

namespace {

using namespace skipvec;

const PlantedBenchmark& bench_data(std::size_t resources) {
  static std::vector<std::pair<std::size_t, PlantedBenchmark>> cache;
  for (const auto& [n, b] : cache) {
    if (n == resources) return b;
  }
  cache.emplace_back(resources, planted_benchmark({.resources = resources, .noise_fraction = 0.5}));
  return cache.back().second;
}

std::vector<Term> resources_of(const LabeledResources& labels) {
  std::vector<Term> out;
  for (const auto& e : labels.entries()) out.push_back(e.resource);
  return out;
}

void BM_ParseNTriples(benchmark::State& state) {
  const std::string& text = bench_data(static_cast<std::size_t>(state.range(0))).ntriples;
  for (auto _ : state) benchmark::DoNotOptimize(parse_ntriples(text));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseNTriples)->Arg(200)->Arg(2000);

void BM_ExtractUnion(benchmark::State& state) {
  const auto& b = bench_data(static_cast<std::size_t>(state.range(0)));
  const auto resources = resources_of(b.labels);
  for (auto _ : state) {
    for (SkipPattern sp : kAllPatterns) benchmark::DoNotOptimize(extract_union(b.graph, resources, sp));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * resources.size()));
}
BENCHMARK(BM_ExtractUnion)->Arg(200)->Arg(2000);

void BM_RankFeatures(benchmark::State& state) {
  const auto& b = bench_data(static_cast<std::size_t>(state.range(0)));
  const auto resources = resources_of(b.labels);
  const FeatureUnion u = extract_union(b.graph, resources, SkipPattern::PPO);
  std::vector<std::size_t> class_of;
  for (const auto& e : b.labels.entries()) class_of.push_back(e.class_index);
  for (auto _ : state) {
    benchmark::DoNotOptimize(select_top_n(rank_features(u, class_of, 2, b.graph.dictionary()), 100));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * u.features.size()));
}
BENCHMARK(BM_RankFeatures)->Arg(200)->Arg(2000);

void BM_KnnPredict(benchmark::State& state) {
  const auto& b = bench_data(static_cast<std::size_t>(state.range(0)));
  const Selection sel = select_features(b.graph, b.labels, {});
  const Dataset d = build_dataset(b.graph, b.labels, sel.index, 1.0);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(knn_predict(d, d.rows[i], 5));
    i = (i + 1) % d.size();
  }
}
BENCHMARK(BM_KnnPredict)->Arg(200)->Arg(2000);

void BM_EvaluateKnn(benchmark::State& state) {
  const auto& b = bench_data(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(b.graph, b.labels, {}));
}
BENCHMARK(BM_EvaluateKnn)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
