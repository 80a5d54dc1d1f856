#ifndef SKIPVEC_SYNTHETIC_HPP
#define SKIPVEC_SYNTHETIC_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include "skipvec/graph.hpp"
#include "skipvec/labels.hpp"

namespace skipvec {

struct RandomGraphOptions {
  std::size_t nodes = 10;
  std::size_t predicates = 3;
  std::size_t triples = 20;
  double literal_fraction = 0.1;
  std::uint64_t seed = 1;
};

/// Uniform random triples over `nodes` IRIs and `predicates` predicates;
/// some objects are literals. Duplicates collapse, so size() <= triples.
Graph random_graph(const RandomGraphOptions& options);

struct PlantedBenchmarkOptions {
  std::size_t resources = 200;
  double noise_fraction = 0.2;
  std::uint64_t seed = 7;
  /// Class signal carried by a depth-1 literal; no depth-2 structure at all.
  bool depth1_only = false;
};

/// Two balanced classes. In the default mode a resource is "positive" iff it
/// reaches ex:target through ex:link / ex:category (the ppo feature
/// (ex:link, ex:category, ex:target)); every resource also carries shared
/// attribute triples, and noise triples on the resources add `noise_fraction` of the
/// structural triple count.
struct PlantedBenchmark {
  std::string ntriples;
  std::string labels_tsv;
  Graph graph;
  LabeledResources labels;
};

PlantedBenchmark planted_benchmark(const PlantedBenchmarkOptions& options);

/// The fruit / animal example graph used throughout the docs and tests.
std::string example_fruit_graph();
std::string example_fruit_labels();

}  // namespace skipvec

#endif  // SKIPVEC_SYNTHETIC_HPP
