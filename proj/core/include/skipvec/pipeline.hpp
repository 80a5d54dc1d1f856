#ifndef SKIPVEC_PIPELINE_HPP
#define SKIPVEC_PIPELINE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <vector>

#include "skipvec/dataset.hpp"
#include "skipvec/evaluation.hpp"
#include "skipvec/extract.hpp"
#include "skipvec/labels.hpp"
#include "skipvec/selection.hpp"
#include "skipvec/skip_pattern.hpp"
#include "skipvec/vectorizer.hpp"

namespace skipvec {

struct PipelineConfig {
  std::vector<SkipPattern> patterns{kAllPatterns.begin(), kAllPatterns.end()};
  /// Features kept per pattern; nullopt keeps every feature, ordered by
  /// canonical string instead of gain ratio.
  std::optional<std::size_t> top_n = 100;
  double lambda = 1.0;
  std::size_t min_count = 2;
};

struct PatternSelection {
  SkipPattern pattern = SkipPattern::P;
  std::size_t extracted = 0;       // |F_sp| over the training resources
  std::size_t after_filter = 0;    // after singleton filtering
  std::vector<RankedFeature> selected;  // coordinate order
};

struct Selection {
  std::vector<PatternSelection> patterns;  // canonical order
  ConcatenatedIndex index;
};

/// Called with the exact resources a selection run reads labels from.
using SelectionObserver = std::function<void(const LabeledResources& training)>;

/// Extract -> singleton filter -> gain-ratio ranking -> top-n per pattern,
/// using only `training`. Throws Error when fewer than 2 classes are present
/// (unless top_n is nullopt, which needs no labels).
Selection select_features(const Graph& graph, const LabeledResources& training, const PipelineConfig& config,
                          const SelectionObserver& observer = {});

/// Vectors and class indices for every entry of `labels`.
Dataset build_dataset(const Graph& graph, const LabeledResources& labels, const ConcatenatedIndex& index,
                      double lambda);

using ClassifierFactory = std::function<std::unique_ptr<Classifier>(std::uint64_t fold_seed)>;

struct EvaluationConfig {
  PipelineConfig pipeline;
  LearnerConfig learner;
  std::size_t folds = 10;
  /// When set, one stratified train/test split with this train fraction
  /// replaces cross-validation.
  std::optional<double> split;
  std::uint64_t seed = 1;
  /// Select features once on all labeled resources instead of per fold.
  bool global_selection = false;
};

struct EvaluationResult {
  CvResult summary;
  /// Predicted class per labeled entry (test side only; SIZE_MAX elsewhere).
  std::vector<std::size_t> predictions;
};

/// Runs the whole pipeline inside each fold (or the single split): feature
/// selection sees training resources only, then vectors are built, the
/// learner is trained and test accuracy recorded.
EvaluationResult evaluate(const Graph& graph, const LabeledResources& labels, const EvaluationConfig& config,
                          const SelectionObserver& observer = {}, const ClassifierFactory& factory = {});

}  // namespace skipvec

#endif  // SKIPVEC_PIPELINE_HPP
