#ifndef SKIPVEC_ADABOOST_HPP
#define SKIPVEC_ADABOOST_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "skipvec/tree.hpp"

namespace skipvec {

struct AdaBoostParams {
  int weak_depth = 1;  // 1..10
  std::size_t rounds = 50;
};

/// Multiclass AdaBoost (SAMME) over depth-limited Gini trees. Boosting stops
/// when a weak learner's weighted error reaches 1 - 1/|C|, or after a learner
/// with zero weighted error.
class AdaBoost : public Classifier {
 public:
  explicit AdaBoost(AdaBoostParams params = {}, std::uint64_t seed = 1);
  void fit(const Dataset& train) override;
  std::size_t predict(const SparseEntries& query) const override;

  std::size_t rounds_used() const { return learners_.size(); }
  const std::vector<double>& learner_weights() const { return alphas_; }
  /// Prediction using only the first `rounds` learners.
  std::size_t predict_partial(const SparseEntries& query, std::size_t rounds) const;

 private:
  AdaBoostParams params_;
  std::uint64_t seed_;
  std::size_t num_classes_ = 0;
  std::vector<DecisionTree> learners_;
  std::vector<double> alphas_;
};

}  // namespace skipvec

#endif  // SKIPVEC_ADABOOST_HPP
