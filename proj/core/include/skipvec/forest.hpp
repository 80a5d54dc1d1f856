#ifndef SKIPVEC_FOREST_HPP
#define SKIPVEC_FOREST_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "skipvec/tree.hpp"

namespace skipvec {

struct ForestParams {
  std::size_t n_trees = 100;
  /// Per-node coordinate subsample; 0 means ceil(sqrt(dim)).
  std::size_t max_features = 0;
  bool bootstrap = true;
  TreeParams tree;
};

/// Bagged Gini trees with per-node coordinate subsampling. Tree t is trained
/// from derive_seed(seed, t), so the model does not depend on thread count.
class RandomForest : public Classifier {
 public:
  explicit RandomForest(ForestParams params = {}, std::uint64_t seed = 1) : params_(params), seed_(seed) {}
  void fit(const Dataset& train) override;
  /// Majority vote; ties go to the smallest class index.
  std::size_t predict(const SparseEntries& query) const override;
  const std::vector<DecisionTree>& trees() const { return trees_; }

 private:
  ForestParams params_;
  std::uint64_t seed_;
  std::size_t num_classes_ = 0;
  std::vector<DecisionTree> trees_;
};

}  // namespace skipvec

#endif  // SKIPVEC_FOREST_HPP
