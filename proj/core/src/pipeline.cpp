#include "skipvec/pipeline.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "skipvec/error.hpp"

namespace skipvec {

namespace {

std::vector<Term> resources_of(const LabeledResources& labels) {
  std::vector<Term> out;
  out.reserve(labels.size());
  for (const auto& e : labels.entries()) out.push_back(e.resource);
  return out;
}

std::vector<std::size_t> classes_of(const LabeledResources& labels) {
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  for (const auto& e : labels.entries()) out.push_back(e.class_index);
  return out;
}

std::vector<SkipPattern> canonical_patterns(std::vector<SkipPattern> patterns) {
  std::sort(patterns.begin(), patterns.end());
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
  return patterns;
}

}  // namespace

Selection select_features(const Graph& graph, const LabeledResources& training, const PipelineConfig& config,
                          const SelectionObserver& observer) {
  if (observer) observer(training);
  const auto resources = resources_of(training);
  const auto class_of = classes_of(training);
  if (config.top_n) {
    const std::set<std::size_t> present(class_of.begin(), class_of.end());
    if (present.size() < 2) {
      throw Error("feature selection needs at least 2 classes among the training resources (found " +
                  std::to_string(present.size()) + ")");
    }
  }

  Selection selection;
  std::vector<FeatureIndex> blocks;
  for (SkipPattern sp : canonical_patterns(config.patterns)) {
    PatternSelection ps;
    ps.pattern = sp;
    const FeatureUnion all = extract_union(graph, resources, sp);
    ps.extracted = all.features.size();
    const FeatureUnion kept = filter_singletons(all, config.min_count);
    ps.after_filter = kept.features.size();

    if (config.top_n) {
      auto ranked = rank_features(kept, class_of, training.classes().size(), graph.dictionary());
      ps.selected = select_top_n(std::move(ranked), *config.top_n);
    } else {
      for (std::size_t i = 0; i < kept.features.size(); ++i) {
        ps.selected.push_back({kept.features[i], canonical_string(kept.features[i], graph.dictionary()), 0.0,
                               kept.holders[i].size()});
      }
      std::sort(ps.selected.begin(), ps.selected.end(),
                [](const RankedFeature& a, const RankedFeature& b) { return a.key < b.key; });
    }

    FeatureIndex block;
    block.pattern = sp;
    for (const auto& r : ps.selected) block.features.push_back(r.feature);
    blocks.push_back(std::move(block));
    selection.patterns.push_back(std::move(ps));
  }
  selection.index = build_index(std::move(blocks));
  return selection;
}

Dataset build_dataset(const Graph& graph, const LabeledResources& labels, const ConcatenatedIndex& index,
                      double lambda) {
  const auto resources = resources_of(labels);
  const auto vectors = vectorize_all(graph, resources, index, lambda);
  return make_dataset(vectors, classes_of(labels), index.total_dim(), labels.classes().size());
}

EvaluationResult evaluate(const Graph& graph, const LabeledResources& labels, const EvaluationConfig& config,
                          const SelectionObserver& observer, const ClassifierFactory& factory) {
  if (labels.classes().size() < 2) throw Error("evaluation needs at least 2 classes");
  const auto class_of = classes_of(labels);

  std::vector<std::vector<std::size_t>> train_sets, test_sets;
  if (config.split) {
    auto split = train_test_split(class_of, labels.classes(), *config.split, config.seed);
    train_sets.push_back(std::move(split.train));
    test_sets.push_back(std::move(split.test));
  } else {
    const auto fold_of = stratified_folds(class_of, labels.classes(), config.folds, config.seed);
    train_sets.resize(config.folds);
    test_sets.resize(config.folds);
    for (std::size_t i = 0; i < fold_of.size(); ++i) {
      for (std::size_t f = 0; f < config.folds; ++f) (f == fold_of[i] ? test_sets : train_sets)[f].push_back(i);
    }
  }

  std::optional<Selection> global;
  if (config.global_selection) global = select_features(graph, labels, config.pipeline, observer);

  EvaluationResult result;
  result.predictions.assign(labels.size(), std::numeric_limits<std::size_t>::max());
  std::vector<double> accuracies;
  for (std::size_t f = 0; f < train_sets.size(); ++f) {
    const auto train_labels = labels.subset(train_sets[f]);
    const auto test_labels = labels.subset(test_sets[f]);
    const Selection selection =
        global ? *global : select_features(graph, train_labels, config.pipeline, observer);

    const Dataset train = build_dataset(graph, train_labels, selection.index, config.pipeline.lambda);
    const Dataset test = build_dataset(graph, test_labels, selection.index, config.pipeline.lambda);

    const std::uint64_t fold_seed = derive_seed(config.seed, f);
    std::unique_ptr<Classifier> model;
    if (factory) {
      model = factory(fold_seed);
    } else {
      LearnerConfig lc = config.learner;
      lc.seed = fold_seed;
      model = make_classifier(lc);
    }
    model->fit(train);

    std::size_t hits = 0;
    for (std::size_t i = 0; i < test.size(); ++i) {
      const std::size_t predicted = model->predict(test.rows[i]);
      result.predictions[test_sets[f][i]] = predicted;
      hits += predicted == test.labels[i];
    }
    accuracies.push_back(test.empty() ? 0.0 : static_cast<double>(hits) / static_cast<double>(test.size()));
  }
  result.summary = summarize(std::move(accuracies));
  return result;
}

}  // namespace skipvec
