#include "skipvec/adaboost.hpp"

#include <cmath>
#include <random>

#include "skipvec/error.hpp"

namespace skipvec {

AdaBoost::AdaBoost(AdaBoostParams params, std::uint64_t seed) : params_(params), seed_(seed) {
  if (params_.weak_depth < 1 || params_.weak_depth > 10) throw Error("adaboost: weak_depth must lie in 1..10");
  if (params_.rounds < 1) throw Error("adaboost: rounds must be >= 1");
}

void AdaBoost::fit(const Dataset& train) {
  if (train.empty()) throw Error("adaboost: empty training set");
  num_classes_ = std::max<std::size_t>(train.num_classes, 1);
  learners_.clear();
  alphas_.clear();

  const std::size_t n = train.size();
  std::vector<double> weights(n, 1.0 / static_cast<double>(n));
  TreeParams weak;
  weak.max_depth = params_.weak_depth;
  const double k = static_cast<double>(num_classes_);
  const double chance_error = 1.0 - 1.0 / k;

  for (std::size_t round = 0; round < params_.rounds; ++round) {
    std::vector<TreeSample> samples(n);
    for (std::size_t i = 0; i < n; ++i) samples[i] = {i, 1, weights[i]};
    std::mt19937_64 rng(derive_seed(seed_, round));
    DecisionTree tree = tree_train(train, weak, samples, rng);

    double error = 0.0, total = 0.0;
    std::vector<bool> miss(n);
    for (std::size_t i = 0; i < n; ++i) {
      miss[i] = tree.predict(train.rows[i]) != train.labels[i];
      total += weights[i];
      if (miss[i]) error += weights[i];
    }
    error /= total;

    if (error <= 0.0) {
      // A perfect learner has unbounded weight; make it outvote everything so far.
      double prior = 0.0;
      for (double a : alphas_) prior += a;
      learners_.push_back(std::move(tree));
      alphas_.push_back(prior + 1.0);
      break;
    }
    if (error >= chance_error) {
      if (learners_.empty()) {
        learners_.push_back(std::move(tree));
        alphas_.push_back(1.0);
      }
      break;
    }

    const double alpha = std::log((1.0 - error) / error) + std::log(k - 1.0);
    learners_.push_back(std::move(tree));
    alphas_.push_back(alpha);

    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (miss[i]) weights[i] *= std::exp(alpha);
      sum += weights[i];
    }
    for (double& w : weights) w /= sum;
  }
}

std::size_t AdaBoost::predict_partial(const SparseEntries& query, std::size_t rounds) const {
  if (learners_.empty()) throw Error("adaboost is not trained");
  std::vector<double> score(num_classes_, 0.0);
  const std::size_t used = std::min(rounds, learners_.size());
  for (std::size_t t = 0; t < used; ++t) score[learners_[t].predict(query)] += alphas_[t];
  return argmax_smallest(score);
}

std::size_t AdaBoost::predict(const SparseEntries& query) const { return predict_partial(query, learners_.size()); }

}  // namespace skipvec
