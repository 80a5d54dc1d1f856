#include "skipvec/knn.hpp"

#include <algorithm>
#include <numeric>

#include "skipvec/error.hpp"

namespace skipvec {

double squared_distance(const SparseEntries& a, const SparseEntries& b) {
  double sum = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      sum += a[i].second * a[i].second;
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      sum += b[j].second * b[j].second;
      ++j;
    } else {
      const double d = a[i].second - b[j].second;
      sum += d * d;
      ++i;
      ++j;
    }
  }
  return sum;
}

std::size_t knn_predict(const Dataset& train, const SparseEntries& query, std::size_t k) {
  if (train.empty()) throw Error("knn: empty training set");
  if (k < 1 || k > train.size()) {
    throw Error("knn: k=" + std::to_string(k) + " must lie in [1, " + std::to_string(train.size()) + "]");
  }
  std::vector<double> dist(train.size());
  for (std::size_t i = 0; i < train.size(); ++i) dist[i] = squared_distance(train.rows[i], query);

  std::vector<std::size_t> order(train.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                    [&](std::size_t a, std::size_t b) { return dist[a] != dist[b] ? dist[a] < dist[b] : a < b; });

  std::vector<double> votes(std::max<std::size_t>(train.num_classes, 1), 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t label = train.labels[order[i]];
    if (label >= votes.size()) votes.resize(label + 1, 0.0);
    votes[label] += 1.0;
  }
  return argmax_smallest(votes);
}

std::size_t KnnClassifier::predict(const SparseEntries& query) const {
  return knn_predict(train_, query, std::min(k_, train_.size()));
}

}  // namespace skipvec
