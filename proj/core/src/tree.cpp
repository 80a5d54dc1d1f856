#include "skipvec/tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "skipvec/error.hpp"

namespace skipvec {

namespace {

double value_at(const SparseEntries& row, std::size_t coord) {
  auto it = std::lower_bound(row.begin(), row.end(), coord,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return it != row.end() && it->first == coord ? it->second : 0.0;
}

struct Split {
  std::size_t coordinate = 0;
  double threshold = 0.0;
  double decrease = -1.0;
  bool valid = false;
};

bool better(const Split& candidate, const Split& best) {
  if (!best.valid) return true;
  if (candidate.decrease != best.decrease) return candidate.decrease > best.decrease;
  if (candidate.coordinate != best.coordinate) return candidate.coordinate < best.coordinate;
  return candidate.threshold < best.threshold;
}

}  // namespace

double gini(std::span<const double> class_weights) {
  const double total = std::accumulate(class_weights.begin(), class_weights.end(), 0.0);
  if (total <= 0.0) return 0.0;
  double sum_sq = 0.0;
  for (double w : class_weights) sum_sq += (w / total) * (w / total);
  return 1.0 - sum_sq;
}

class TreeBuilder {
 public:
  TreeBuilder(const Dataset& data, const TreeParams& params, std::span<const TreeSample> samples,
              std::mt19937_64& rng)
      : data_(data), params_(params), rng_(rng), classes_(std::max<std::size_t>(data.num_classes, 1)) {
    // Merge repeated rows so each row appears once per node.
    std::map<std::size_t, TreeSample> merged;
    for (const auto& s : samples) {
      if (s.count == 0) continue;
      auto [it, inserted] = merged.emplace(s.row, TreeSample{s.row, 0, 0.0});
      it->second.count += s.count;
      it->second.weight += s.weight * static_cast<double>(s.count);
    }
    for (const auto& [row, s] : merged) samples_.push_back(s);  // weight now holds count * weight

    columns_.resize(data.dim);
    for (std::size_t r = 0; r < data.rows.size(); ++r) {
      for (const auto& [c, v] : data.rows[r]) columns_[c].emplace_back(r, v);
    }
    stamp_.assign(data.rows.size(), -1);
  }

  DecisionTree build() {
    DecisionTree tree;
    std::vector<std::size_t> all(samples_.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    grow(tree, all, 0);
    return tree;
  }

 private:
  int grow(DecisionTree& tree, const std::vector<std::size_t>& members, int depth) {
    const int id = static_cast<int>(tree.nodes_.size());
    tree.nodes_.emplace_back();
    {
      TreeNode& node = tree.nodes_.back();
      node.class_weights.assign(classes_, 0.0);
      for (std::size_t m : members) node.class_weights[data_.labels[samples_[m].row]] += samples_[m].weight;
      node.prediction = argmax_smallest(node.class_weights);
    }

    std::size_t count = 0;
    for (std::size_t m : members) count += samples_[m].count;
    const auto& weights = tree.nodes_[id].class_weights;
    const auto nonzero_classes = std::count_if(weights.begin(), weights.end(), [](double w) { return w > 0.0; });
    if (nonzero_classes <= 1) return id;
    if (params_.max_depth >= 0 && depth >= params_.max_depth) return id;
    if (count < 2 * std::max<std::size_t>(params_.min_leaf, 1)) return id;

    const Split split = find_split(members, weights, count, id);
    if (!split.valid) return id;

    std::vector<std::size_t> left, right;
    for (std::size_t m : members) {
      (value_at(data_.rows[samples_[m].row], split.coordinate) <= split.threshold ? left : right).push_back(m);
    }
    const int l = grow(tree, left, depth + 1);
    const int r = grow(tree, right, depth + 1);
    TreeNode& node = tree.nodes_[id];
    node.coordinate = static_cast<int>(split.coordinate);
    node.threshold = split.threshold;
    node.left = l;
    node.right = r;
    return id;
  }

  struct Item {
    double value;
    std::size_t cls;
    double weight;
    std::size_t count;
  };

  Split find_split(const std::vector<std::size_t>& members, const std::vector<double>& class_weights,
                   std::size_t count, int stamp) {
    for (std::size_t m : members) stamp_[samples_[m].row] = stamp;

    std::vector<std::size_t> class_counts(classes_, 0);
    for (std::size_t m : members) class_counts[data_.labels[samples_[m].row]] += samples_[m].count;
    if (row_sample_.size() != data_.rows.size()) {
      row_sample_.assign(data_.rows.size(), 0);
      for (std::size_t i = 0; i < samples_.size(); ++i) row_sample_[samples_[i].row] = i;
    }

    std::vector<std::size_t> order(data_.dim);
    std::iota(order.begin(), order.end(), std::size_t{0});
    const bool subsample = params_.max_features > 0 && params_.max_features < data_.dim;
    if (subsample) std::shuffle(order.begin(), order.end(), rng_);

    const double parent_gini = gini(class_weights);
    const double total_weight = std::accumulate(class_weights.begin(), class_weights.end(), 0.0);
    const std::size_t min_leaf = std::max<std::size_t>(params_.min_leaf, 1);

    Split best;
    std::size_t examined = 0;
    std::vector<Item> items;
    std::vector<double> nz_weight(classes_), left_w(classes_), right_w(classes_);
    std::vector<std::size_t> nz_count(classes_);

    for (std::size_t coord : order) {
      if (subsample && examined >= params_.max_features) break;
      items.clear();
      std::fill(nz_weight.begin(), nz_weight.end(), 0.0);
      std::fill(nz_count.begin(), nz_count.end(), 0);
      for (const auto& [row, v] : columns_[coord]) {
        if (stamp_[row] != stamp || v == 0.0) continue;
        const TreeSample& s = samples_[row_sample_[row]];
        const std::size_t cls = data_.labels[row];
        items.push_back({v, cls, s.weight, s.count});
        nz_weight[cls] += s.weight;
        nz_count[cls] += s.count;
      }
      if (items.empty()) continue;  // all zero in this node
      for (std::size_t c = 0; c < classes_; ++c) {
        const std::size_t zc = class_counts[c] - nz_count[c];
        if (zc > 0) items.push_back({0.0, c, std::max(0.0, class_weights[c] - nz_weight[c]), zc});
      }
      std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.value < b.value; });
      if (items.front().value == items.back().value) continue;  // constant
      ++examined;

      std::fill(left_w.begin(), left_w.end(), 0.0);
      std::size_t left_count = 0;
      double left_total = 0.0;
      for (std::size_t i = 0; i + 1 < items.size(); ++i) {
        left_w[items[i].cls] += items[i].weight;
        left_total += items[i].weight;
        left_count += items[i].count;
        if (items[i].value == items[i + 1].value) continue;
        const std::size_t right_count = count - left_count;
        if (left_count < min_leaf || right_count < min_leaf) continue;
        for (std::size_t c = 0; c < classes_; ++c) right_w[c] = class_weights[c] - left_w[c];
        const double right_total = total_weight - left_total;
        Split candidate;
        candidate.valid = true;
        candidate.coordinate = coord;
        candidate.threshold = items[i].value + (items[i + 1].value - items[i].value) / 2.0;
        candidate.decrease = parent_gini - (left_total / total_weight) * gini(left_w) -
                             (right_total / total_weight) * gini(right_w);
        if (better(candidate, best)) best = candidate;
      }
    }
    return best;
  }

  const Dataset& data_;
  TreeParams params_;
  std::mt19937_64& rng_;
  std::size_t classes_;
  std::vector<TreeSample> samples_;
  std::vector<std::vector<std::pair<std::size_t, double>>> columns_;
  std::vector<int> stamp_;
  std::vector<std::size_t> row_sample_;
};

std::size_t DecisionTree::predict(const SparseEntries& query) const {
  const auto dist = distribution(query);
  return argmax_smallest(dist);
}

std::span<const double> DecisionTree::distribution(const SparseEntries& query) const {
  if (nodes_.empty()) throw Error("decision tree is not trained");
  std::size_t i = 0;
  while (!nodes_[i].is_leaf()) {
    const auto& n = nodes_[i];
    i = static_cast<std::size_t>(value_at(query, static_cast<std::size_t>(n.coordinate)) <= n.threshold ? n.left
                                                                                                       : n.right);
  }
  return nodes_[i].class_weights;
}

int DecisionTree::depth() const {
  if (nodes_.empty()) return 0;
  std::vector<int> depth_of(nodes_.size(), 0);
  int deepest = 0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {  // children always follow parents
    deepest = std::max(deepest, depth_of[i]);
    if (!nodes_[i].is_leaf()) {
      depth_of[nodes_[i].left] = depth_of[i] + 1;
      depth_of[nodes_[i].right] = depth_of[i] + 1;
    }
  }
  return deepest;
}

std::size_t DecisionTree::leaf_count() const {
  return static_cast<std::size_t>(std::count_if(nodes_.begin(), nodes_.end(), [](const TreeNode& n) {
    return n.is_leaf();
  }));
}

DecisionTree tree_train(const Dataset& train, const TreeParams& params, std::span<const TreeSample> samples,
                        std::mt19937_64& rng) {
  if (train.empty()) throw Error("tree_train: empty training set");
  TreeBuilder builder(train, params, samples, rng);
  return builder.build();
}

DecisionTree tree_train(const Dataset& train, const TreeParams& params, std::uint64_t seed) {
  std::vector<TreeSample> samples;
  samples.reserve(train.size());
  for (std::size_t r = 0; r < train.size(); ++r) samples.push_back({r, 1, 1.0});
  std::mt19937_64 rng(seed);
  return tree_train(train, params, samples, rng);
}

}  // namespace skipvec
