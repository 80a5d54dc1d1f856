#include "skipvec/dataset.hpp"

#include "skipvec/adaboost.hpp"
#include "skipvec/error.hpp"
#include "skipvec/forest.hpp"
#include "skipvec/knn.hpp"
#include "skipvec/tree.hpp"

namespace skipvec {

void Dataset::validate() const {
  if (rows.size() != labels.size()) throw Error("dataset: rows and labels differ in length");
  for (const auto& row : rows) {
    for (const auto& [c, v] : row) {
      if (c >= dim) throw Error("dataset: coordinate " + std::to_string(c) + " >= dim " + std::to_string(dim));
    }
  }
  for (std::size_t l : labels) {
    if (l >= num_classes) throw Error("dataset: label index out of range");
  }
}

Dataset Dataset::subset(std::span<const std::size_t> positions) const {
  Dataset out;
  out.dim = dim;
  out.num_classes = num_classes;
  out.rows.reserve(positions.size());
  out.labels.reserve(positions.size());
  for (std::size_t p : positions) {
    out.rows.push_back(rows.at(p));
    out.labels.push_back(labels.at(p));
  }
  return out;
}

Dataset make_dataset(std::span<const SkipVector> vectors, std::span<const std::size_t> labels, std::size_t dim,
                     std::size_t num_classes) {
  Dataset out;
  out.dim = dim;
  out.num_classes = num_classes;
  for (const auto& v : vectors) out.rows.push_back(v.entries);
  out.labels.assign(labels.begin(), labels.end());
  out.validate();
  return out;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the pair
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t argmax_smallest(std::span<const double> scores) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > scores[best]) best = i;
  }
  return best;
}

std::vector<std::size_t> Classifier::predict_all(const Dataset& data) const {
  std::vector<std::size_t> out;
  out.reserve(data.size());
  for (const auto& row : data.rows) out.push_back(predict(row));
  return out;
}

double Classifier::accuracy(const Dataset& data) const {
  if (data.empty()) return 0.0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < data.size(); ++i) hits += predict(data.rows[i]) == data.labels[i];
  return static_cast<double>(hits) / static_cast<double>(data.size());
}

LearnerKind parse_learner(const std::string& name) {
  if (name == "knn") return LearnerKind::Knn;
  if (name == "tree") return LearnerKind::Tree;
  if (name == "rf") return LearnerKind::Forest;
  if (name == "ada") return LearnerKind::AdaBoost;
  throw Error("unknown learner '" + name + "' (expected knn, tree, rf or ada)");
}

std::string learner_name(LearnerKind kind) {
  switch (kind) {
    case LearnerKind::Knn: return "knn";
    case LearnerKind::Tree: return "tree";
    case LearnerKind::Forest: return "rf";
    case LearnerKind::AdaBoost: return "ada";
  }
  return "knn";
}

std::unique_ptr<Classifier> make_classifier(const LearnerConfig& config) {
  switch (config.kind) {
    case LearnerKind::Knn:
      return std::make_unique<KnnClassifier>(config.k);
    case LearnerKind::Tree: {
      TreeParams params;
      params.max_depth = config.max_depth;
      params.min_leaf = config.min_leaf;
      return std::make_unique<TreeClassifier>(params, config.seed);
    }
    case LearnerKind::Forest: {
      ForestParams params;
      params.n_trees = config.trees;
      params.tree.max_depth = config.max_depth;
      params.tree.min_leaf = config.min_leaf;
      return std::make_unique<RandomForest>(params, config.seed);
    }
    case LearnerKind::AdaBoost: {
      AdaBoostParams params;
      params.weak_depth = config.weak_depth;
      params.rounds = config.rounds;
      return std::make_unique<AdaBoost>(params, config.seed);
    }
  }
  throw Error("unknown learner");
}

}  // namespace skipvec
