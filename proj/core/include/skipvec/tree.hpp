#ifndef SKIPVEC_TREE_HPP
#define SKIPVEC_TREE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "skipvec/dataset.hpp"

namespace skipvec {

struct TreeParams {
  int max_depth = -1;        // -1: unlimited
  std::size_t min_leaf = 1;  // minimum training samples per child
  /// Coordinates examined per node; 0 examines all. Coordinates constant
  /// within the node are skipped without counting toward the limit.
  std::size_t max_features = 0;
};

struct TreeNode {
  int coordinate = -1;  // -1 for leaves
  double threshold = 0.0;  // value <= threshold goes left
  int left = -1;
  int right = -1;
  std::vector<double> class_weights;
  std::size_t prediction = 0;

  bool is_leaf() const { return coordinate < 0; }
};

/// Weighted Gini impurity 1 - sum_c (w_c / W)^2.
double gini(std::span<const double> class_weights);

/// One training sample: a dataset row with a multiplicity (bootstrap count)
/// and a weight (boosting).
struct TreeSample {
  std::size_t row;
  std::size_t count = 1;
  double weight = 1.0;
};

/// CART classification tree with Gini splitting at midpoints between
/// consecutive distinct values.
class DecisionTree {
 public:
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  std::size_t predict(const SparseEntries& query) const;
  std::span<const double> distribution(const SparseEntries& query) const;
  int depth() const;
  std::size_t leaf_count() const;

 private:
  friend class TreeBuilder;
  std::vector<TreeNode> nodes_;
};

/// Greedy best-Gini-decrease splits; stops at max_depth, purity, min_leaf or
/// when no threshold separates the node. Ties between equally good splits go
/// to the lower coordinate, then the lower threshold. `rng` is used only for
/// coordinate subsampling.
DecisionTree tree_train(const Dataset& train, const TreeParams& params, std::uint64_t seed);
DecisionTree tree_train(const Dataset& train, const TreeParams& params, std::span<const TreeSample> samples,
                        std::mt19937_64& rng);

class TreeClassifier : public Classifier {
 public:
  explicit TreeClassifier(TreeParams params = {}, std::uint64_t seed = 1) : params_(params), seed_(seed) {}
  void fit(const Dataset& train) override { tree_ = tree_train(train, params_, seed_); }
  std::size_t predict(const SparseEntries& query) const override { return tree_.predict(query); }
  const DecisionTree& tree() const { return tree_; }

 private:
  TreeParams params_;
  std::uint64_t seed_;
  DecisionTree tree_;
};

}  // namespace skipvec

#endif  // SKIPVEC_TREE_HPP
