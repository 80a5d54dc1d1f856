#include "skipvec/synthetic.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

#include "skipvec/ntriples.hpp"

namespace skipvec {

namespace {

constexpr const char* kEx = "http://example.org/";

std::string ex(const std::string& local) { return "<" + std::string(kEx) + local + ">"; }

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

std::string pad(std::size_t i) {
  std::string s = std::to_string(i);
  return std::string(s.size() < 3 ? 3 - s.size() : 0, '0') + s;
}

}  // namespace

Graph random_graph(const RandomGraphOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::bernoulli_distribution literal(options.literal_fraction);
  GraphBuilder builder;
  const std::size_t nodes = std::max<std::size_t>(options.nodes, 1);
  const std::size_t preds = std::max<std::size_t>(options.predicates, 1);
  for (std::size_t t = 0; t < options.triples; ++t) {
    const Term s = Term::iri(std::string(kEx) + "n" + std::to_string(pick(rng, nodes)));
    const Term p = Term::iri(std::string(kEx) + "p" + std::to_string(pick(rng, preds)));
    const Term o = literal(rng) ? Term::plain_literal("v" + std::to_string(pick(rng, nodes)))
                                : Term::iri(std::string(kEx) + "n" + std::to_string(pick(rng, nodes)));
    builder.add(s, p, o);
  }
  return std::move(builder).build();
}

PlantedBenchmark planted_benchmark(const PlantedBenchmarkOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::ostringstream nt;
  std::ostringstream labels;
  std::size_t structural = 0;

  auto triple = [&](const std::string& s, const std::string& p, const std::string& o) {
    nt << s << ' ' << p << ' ' << o << " .\n";
  };

  constexpr std::size_t kHubs = 10;
  constexpr std::size_t kAttributes = 4;
  constexpr std::size_t kValues = 8;

  if (!options.depth1_only) {
    for (std::size_t h = 0; h < kHubs; ++h) {
      triple(ex("marked" + std::to_string(h)), ex("category"), ex("target"));
      triple(ex("plain" + std::to_string(h)), ex("category"), ex("decoy" + std::to_string(h % 3)));
      structural += 2;
    }
  }

  std::vector<std::string> resources;
  for (std::size_t i = 0; i < options.resources; ++i) {
    const std::string r = ex("r" + pad(i));
    resources.push_back(r);
    const bool positive = i % 2 == 1;
    labels << r << '\t' << (positive ? "positive" : "negative") << '\n';

    if (options.depth1_only) {
      triple(r, ex("flag"), positive ? "\"yes\"" : "\"no\"");
    } else {
      const std::string hub = (positive ? "marked" : "plain") + std::to_string(pick(rng, kHubs));
      triple(r, ex("link"), ex(hub));
    }
    ++structural;

    const std::size_t attrs = 1 + pick(rng, 2);
    for (std::size_t a = 0; a < attrs; ++a) {
      triple(r, ex("attr" + std::to_string(pick(rng, kAttributes))),
             options.depth1_only ? "\"value" + std::to_string(pick(rng, kValues)) + "\""
                                 : ex("value" + std::to_string(pick(rng, kValues))));
      ++structural;
    }
  }

  const auto noise = static_cast<std::size_t>(options.noise_fraction * static_cast<double>(structural));
  // Noise stays one hop from the resources and ends in leaf nodes, so it adds
  // class-independent coordinates without giving attribute values a depth-2
  // fingerprint of their own.
  for (std::size_t k = 0; k < noise; ++k) {
    const std::string p = ex("noise" + std::to_string(pick(rng, kAttributes)));
    const std::string junk = "junk" + std::to_string(pick(rng, kValues));
    triple(resources[pick(rng, resources.size())], p, options.depth1_only ? "\"" + junk + "\"" : ex(junk));
  }

  PlantedBenchmark out;
  out.ntriples = nt.str();
  out.labels_tsv = labels.str();
  out.graph = parse_ntriples(out.ntriples);
  out.labels = load_labels(out.labels_tsv);
  return out;
}

std::string example_fruit_graph() {
  return R"(# fruits and animals
<http://example.org/apple> <http://example.org/color> <http://example.org/red> .
<http://example.org/apple> <http://example.org/color> <http://example.org/green> .
<http://example.org/apple> <http://example.org/shape> <http://example.org/sphere> .
<http://example.org/apple> <http://example.org/taste> <http://example.org/sweet> .
<http://example.org/apple> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://example.org/fruits> .
<http://example.org/fruits> <http://www.w3.org/2000/01/rdf-schema#subClassOf> <http://example.org/foods> .
<http://example.org/monkey> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://example.org/animals> .
<http://example.org/monkey> <http://example.org/like> <http://example.org/banana> .
<http://example.org/monkey> <http://example.org/live> <http://example.org/forest> .
<http://example.org/monkey> <http://example.org/climb> <http://example.org/tree> .
<http://example.org/animals> <http://www.w3.org/2000/01/rdf-schema#subClassOf> <http://example.org/creatures> .
)";
}

std::string example_fruit_labels() {
  return "<http://example.org/apple>\tfruit\n<http://example.org/monkey>\tanimal\n";
}

}  // namespace skipvec
