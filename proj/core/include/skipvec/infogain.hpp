#ifndef SKIPVEC_INFOGAIN_HPP
#define SKIPVEC_INFOGAIN_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace skipvec {

/// Shannon entropy in bits of a class-count vector. Zero counts contribute
/// nothing. Throws std::invalid_argument if every count is zero.
double entropy(std::span<const std::uint64_t> class_counts);

/// Per-class counts of the training resources that have / lack one feature.
struct FeatureStats {
  std::vector<std::uint64_t> with_counts;
  std::vector<std::uint64_t> without_counts;

  std::uint64_t with_total() const;
  std::uint64_t without_total() const;
  std::uint64_t total() const { return with_total() + without_total(); }
  /// Class counts over all resources (with + without).
  std::vector<std::uint64_t> class_totals() const;
};

/// `holders` are sorted positions into `class_of` (one class index per
/// training resource).
FeatureStats make_stats(std::span<const std::size_t> holders, std::span<const std::size_t> class_of,
                        std::size_t num_classes);

/// Entropy after partitioning by the feature, weighted by side size.
double conditional_entropy(const FeatureStats& stats);
/// Entropy of the two-way split sizes (|with|, |without|).
double split_info(const FeatureStats& stats);
double information_gain(const FeatureStats& stats, double base_entropy);
/// information_gain / split_info, or 0 when split_info is 0 (the feature is
/// held by every resource or by none).
double gain_ratio(const FeatureStats& stats, double base_entropy);

}  // namespace skipvec

#endif  // SKIPVEC_INFOGAIN_HPP
