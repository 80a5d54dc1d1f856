#ifndef SKIPVEC_KNN_HPP
#define SKIPVEC_KNN_HPP

#include <cstddef>

#include "skipvec/dataset.hpp"

namespace skipvec {

double squared_distance(const SparseEntries& a, const SparseEntries& b);

/// Majority vote among the k nearest training rows by Euclidean distance.
/// Equal distances keep training-row order; equal votes go to the smallest
/// class index. Throws Error if train is empty or k is not in [1, |train|].
std::size_t knn_predict(const Dataset& train, const SparseEntries& query, std::size_t k);

class KnnClassifier : public Classifier {
 public:
  explicit KnnClassifier(std::size_t k = 5) : k_(k) {}
  void fit(const Dataset& train) override { train_ = train; }
  std::size_t predict(const SparseEntries& query) const override;

 private:
  std::size_t k_;
  Dataset train_;
};

}  // namespace skipvec

#endif  // SKIPVEC_KNN_HPP
