#ifndef SKIPVEC_DATASET_HPP
#define SKIPVEC_DATASET_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "skipvec/vectorizer.hpp"

namespace skipvec {

/// Labeled sparse rows for the native learners.
struct Dataset {
  std::vector<SparseEntries> rows;
  std::vector<std::size_t> labels;  // class indices
  std::size_t dim = 0;
  std::size_t num_classes = 0;

  std::size_t size() const { return rows.size(); }
  bool empty() const { return rows.empty(); }
  /// Throws Error if lengths differ, a coordinate is >= dim or a label >= num_classes.
  void validate() const;
  Dataset subset(std::span<const std::size_t> positions) const;
};

Dataset make_dataset(std::span<const SkipVector> vectors, std::span<const std::size_t> labels, std::size_t dim,
                     std::size_t num_classes);

/// Independent deterministic sub-seed for worker `index`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Index of the largest entry; ties go to the smallest index.
std::size_t argmax_smallest(std::span<const double> scores);

class Classifier {
 public:
  virtual ~Classifier() = default;
  virtual void fit(const Dataset& train) = 0;
  virtual std::size_t predict(const SparseEntries& query) const = 0;

  std::vector<std::size_t> predict_all(const Dataset& data) const;
  double accuracy(const Dataset& data) const;
};

enum class LearnerKind { Knn, Tree, Forest, AdaBoost };
LearnerKind parse_learner(const std::string& name);
std::string learner_name(LearnerKind kind);

struct LearnerConfig {
  LearnerKind kind = LearnerKind::Knn;
  std::size_t k = 5;
  std::size_t trees = 100;
  int weak_depth = 1;
  std::size_t rounds = 50;
  int max_depth = -1;  // -1: unlimited
  std::size_t min_leaf = 1;
  std::uint64_t seed = 1;
};

std::unique_ptr<Classifier> make_classifier(const LearnerConfig& config);

}  // namespace skipvec

#endif  // SKIPVEC_DATASET_HPP
