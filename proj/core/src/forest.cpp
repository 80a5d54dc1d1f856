#include "skipvec/forest.hpp"

#include <cmath>
#include <random>

#include "skipvec/error.hpp"
#include "skipvec/parallel.hpp"

namespace skipvec {

void RandomForest::fit(const Dataset& train) {
  if (params_.n_trees < 1) throw Error("random forest: n_trees must be >= 1");
  if (train.empty()) throw Error("random forest: empty training set");
  num_classes_ = train.num_classes;

  TreeParams tree_params = params_.tree;
  tree_params.max_features = params_.max_features > 0
                                 ? params_.max_features
                                 : static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(train.dim))));

  trees_.assign(params_.n_trees, DecisionTree{});
  parallel_for(params_.n_trees, [&](std::size_t t) {
    std::mt19937_64 rng(derive_seed(seed_, t));
    std::vector<TreeSample> samples;
    if (params_.bootstrap) {
      std::vector<std::size_t> counts(train.size(), 0);
      std::uniform_int_distribution<std::size_t> draw(0, train.size() - 1);
      for (std::size_t i = 0; i < train.size(); ++i) ++counts[draw(rng)];
      for (std::size_t r = 0; r < counts.size(); ++r) {
        if (counts[r] > 0) samples.push_back({r, counts[r], 1.0});
      }
    } else {
      for (std::size_t r = 0; r < train.size(); ++r) samples.push_back({r, 1, 1.0});
    }
    trees_[t] = tree_train(train, tree_params, samples, rng);
  });
}

std::size_t RandomForest::predict(const SparseEntries& query) const {
  if (trees_.empty()) throw Error("random forest is not trained");
  std::vector<double> votes(std::max<std::size_t>(num_classes_, 1), 0.0);
  for (const auto& tree : trees_) votes[tree.predict(query)] += 1.0;
  return argmax_smallest(votes);
}

}  // namespace skipvec
