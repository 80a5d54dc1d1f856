#include "skipvec/infogain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace skipvec {

double entropy(std::span<const std::uint64_t> class_counts) {
  const std::uint64_t total = std::accumulate(class_counts.begin(), class_counts.end(), std::uint64_t{0});
  if (total == 0) throw std::invalid_argument("entropy: all class counts are zero");
  const double k = static_cast<double>(total);
  double h = 0.0;
  for (std::uint64_t c : class_counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / k;
    h -= p * std::log2(p);
  }
  return h;
}

std::uint64_t FeatureStats::with_total() const {
  return std::accumulate(with_counts.begin(), with_counts.end(), std::uint64_t{0});
}

std::uint64_t FeatureStats::without_total() const {
  return std::accumulate(without_counts.begin(), without_counts.end(), std::uint64_t{0});
}

std::vector<std::uint64_t> FeatureStats::class_totals() const {
  std::vector<std::uint64_t> out(with_counts.size());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = with_counts[c] + without_counts[c];
  return out;
}

FeatureStats make_stats(std::span<const std::size_t> holders, std::span<const std::size_t> class_of,
                        std::size_t num_classes) {
  FeatureStats stats;
  stats.with_counts.assign(num_classes, 0);
  stats.without_counts.assign(num_classes, 0);
  for (std::size_t c : class_of) ++stats.without_counts.at(c);
  for (std::size_t r : holders) {
    const std::size_t c = class_of[r];
    ++stats.with_counts[c];
    --stats.without_counts[c];
  }
  return stats;
}

double conditional_entropy(const FeatureStats& stats) {
  const double with = static_cast<double>(stats.with_total());
  const double without = static_cast<double>(stats.without_total());
  const double total = with + without;
  if (total == 0) throw std::invalid_argument("conditional_entropy: no resources");
  double h = 0.0;
  if (with > 0) h += with / total * entropy(stats.with_counts);
  if (without > 0) h += without / total * entropy(stats.without_counts);
  return h;
}

double split_info(const FeatureStats& stats) {
  const std::uint64_t sides[2] = {stats.with_total(), stats.without_total()};
  return entropy(sides);
}

double information_gain(const FeatureStats& stats, double base_entropy) {
  // Round-off can push a zero gain slightly negative.
  return std::max(0.0, base_entropy - conditional_entropy(stats));
}

double gain_ratio(const FeatureStats& stats, double base_entropy) {
  const double si = split_info(stats);
  if (si == 0.0) return 0.0;
  return information_gain(stats, base_entropy) / si;
}

}  // namespace skipvec
