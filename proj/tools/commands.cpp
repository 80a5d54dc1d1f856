#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "skipvec/error.hpp"
#include "skipvec/extract.hpp"
#include "skipvec/labels.hpp"
#include "skipvec/ntriples.hpp"
#include "skipvec/oracle.hpp"
#include "skipvec/pipeline.hpp"
#include "skipvec/selection.hpp"
#include "skipvec/sparse_io.hpp"
#include "skipvec/synthetic.hpp"

namespace skipvec::cli {

namespace {

namespace fs = std::filesystem;

struct Inputs {
  Graph graph;
  LabeledResources labels;
};

Inputs load_inputs(const RunConfig& config) {
  if (config.graph_path.empty()) throw Error("missing --graph");
  if (config.labels_path.empty()) throw Error("missing --labels");
  Inputs in{load_ntriples_file(config.graph_path), load_labels_file(config.labels_path)};
  if (in.labels.empty()) throw Error(config.labels_path + ": label file has no entries");
  if (!config.leak_predicates.empty()) {
    in.graph = remove_label_leak_triples(in.graph, in.labels, config.leak_predicates);
  }
  return in;
}

std::ofstream open_output(const RunConfig& config, const std::string& name) {
  fs::create_directories(config.out_dir);
  const fs::path path = fs::path(config.out_dir) / name;
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot write " + path.string());
  return f;
}

std::vector<Term> resources_of(const LabeledResources& labels) {
  std::vector<Term> out;
  for (const auto& e : labels.entries()) out.push_back(e.resource);
  return out;
}

std::vector<SkipPattern> sorted_patterns(std::vector<SkipPattern> p) {
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  return p;
}

}  // namespace

int cmd_extract(const RunConfig& config, std::ostream& out, std::ostream&) {
  const Inputs in = load_inputs(config);
  const auto resources = resources_of(in.labels);
  auto features = open_output(config, "features.tsv");
  auto counts = open_output(config, "feature_counts.tsv");

  for (SkipPattern sp : sorted_patterns(config.pipeline.patterns)) {
    const FeatureUnion u = extract_union(in.graph, resources, sp);
    std::vector<std::pair<std::string, std::size_t>> rows;
    for (std::size_t i = 0; i < u.features.size(); ++i) {
      rows.emplace_back(canonical_string(u.features[i], in.graph.dictionary()), u.holders[i].size());
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& [key, occ] : rows) features << pattern_tag(sp) << '\t' << key << '\t' << occ << '\n';
    counts << pattern_tag(sp) << '\t' << rows.size() << '\n';
    out << pattern_tag(sp) << '\t' << rows.size() << " features\n";
  }
  return 0;
}

int cmd_select(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Inputs in = load_inputs(config);
  if (config.pipeline.top_n && *config.pipeline.top_n == 0) err << "warning: top-n is 0; the index will be empty\n";
  const Selection selection = select_features(in.graph, in.labels, config.pipeline);

  auto ranking = open_output(config, "ranking.tsv");
  std::size_t total = 0;
  for (const auto& ps : selection.patterns) {
    write_ranking_tsv(ranking, ps.pattern, ps.selected);
    total += ps.selected.size();
    out << pattern_tag(ps.pattern) << "\textracted=" << ps.extracted << "\tkept=" << ps.after_filter
        << "\tselected=" << ps.selected.size() << '\n';
  }
  if (total == 0) {
    err << "warning: empty ranking (min-count=" << config.pipeline.min_count << ", top-n="
        << (config.pipeline.top_n ? std::to_string(*config.pipeline.top_n) : "all") << ")\n";
  }
  return 0;
}

int cmd_vectorize(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Inputs in = load_inputs(config);
  if (config.pipeline.top_n && *config.pipeline.top_n == 0) err << "warning: top-n is 0; the index will be empty\n";
  const Selection selection = select_features(in.graph, in.labels, config.pipeline);
  const auto resources = resources_of(in.labels);
  const auto vectors = vectorize_all(in.graph, resources, selection.index, config.pipeline.lambda);

  auto dataset = open_output(config, "dataset.svm");
  auto dictionary = open_output(config, "dictionary.tsv");
  auto label_map = open_output(config, "label_map.tsv");
  export_sparse(vectors, in.labels, selection.index, in.graph.dictionary(), {&dataset, &dictionary, &label_map});
  out << "resources\t" << vectors.size() << "\ndim\t" << selection.index.total_dim() << '\n';
  return 0;
}

int cmd_evaluate(const RunConfig& config, std::ostream& out, std::ostream&) {
  const Inputs in = load_inputs(config);
  const EvaluationResult result = evaluate(in.graph, in.labels, config.evaluation());
  std::ostringstream report;
  write_evaluation_report(report, result.summary);
  auto file = open_output(config, "report.tsv");
  file << report.str();
  out << report.str();
  return 0;
}

int cmd_oracle_check(const RunConfig& config, std::ostream& out, std::ostream&) {
  OracleCheckConfig oc;
  oc.seed = config.seed;
  oc.graphs = config.oracle_graphs;
  oc.max_depth = config.max_depth;
  oc.inject_fault = config.inject_fault;
  const OracleCheckReport report = run_oracle_checks(oc);
  for (const auto& line : report.lines) out << line << '\n';
  for (const auto& v : report.violations) out << "VIOLATION\t" << v << '\n';
  out << (report.ok() ? "PASS" : "FAIL") << '\n';
  return report.ok() ? 0 : 1;
}

int cmd_generate(const RunConfig& config, std::ostream& out, std::ostream&) {
  PlantedBenchmarkOptions opts;
  opts.resources = config.resources;
  opts.noise_fraction = config.noise;
  opts.seed = config.seed;
  opts.depth1_only = config.depth1_only;
  const PlantedBenchmark bench = planted_benchmark(opts);

  std::string labels_tsv = bench.labels_tsv;
  if (config.shuffle_labels) {
    std::vector<std::size_t> classes;
    for (const auto& e : bench.labels.entries()) classes.push_back(e.class_index);
    std::mt19937_64 rng(derive_seed(config.seed, 0x5eed));
    std::shuffle(classes.begin(), classes.end(), rng);
    std::ostringstream os;
    const auto& entries = bench.labels.entries();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      os << to_ntriples(entries[i].resource) << '\t' << bench.labels.classes()[classes[i]] << '\n';
    }
    labels_tsv = os.str();
  }

  auto graph = open_output(config, "graph.nt");
  graph << bench.ntriples;
  auto labels = open_output(config, "labels.tsv");
  labels << labels_tsv;
  out << "triples\t" << bench.graph.size() << "\nresources\t" << bench.labels.size() << '\n';
  return 0;
}

}  // namespace skipvec::cli
