#include "skipvec/selection.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "skipvec/infogain.hpp"

namespace skipvec {

FeatureUnion filter_singletons(const FeatureUnion& features, std::size_t min_count) {
  if (min_count < 1) throw std::invalid_argument("filter_singletons: min_count must be >= 1");
  FeatureUnion out;
  out.pattern = features.pattern;
  for (std::size_t i = 0; i < features.features.size(); ++i) {
    if (features.holders[i].size() >= min_count) {
      out.features.push_back(features.features[i]);
      out.holders.push_back(features.holders[i]);
    }
  }
  return out;
}

std::vector<RankedFeature> rank_features(const FeatureUnion& features, std::span<const std::size_t> class_of,
                                         std::size_t num_classes, const TermDictionary& dict) {
  std::vector<RankedFeature> out;
  out.reserve(features.features.size());
  if (class_of.empty()) return out;
  std::vector<std::uint64_t> class_counts(num_classes, 0);
  for (std::size_t c : class_of) ++class_counts.at(c);
  const double base = entropy(class_counts);
  for (std::size_t i = 0; i < features.features.size(); ++i) {
    const auto stats = make_stats(features.holders[i], class_of, num_classes);
    out.push_back({features.features[i], canonical_string(features.features[i], dict), gain_ratio(stats, base),
                   features.holders[i].size()});
  }
  return out;
}

std::vector<RankedFeature> select_top_n(std::vector<RankedFeature> ranked, std::size_t n) {
  std::sort(ranked.begin(), ranked.end(), [](const RankedFeature& a, const RankedFeature& b) {
    if (a.gain_ratio != b.gain_ratio) return a.gain_ratio > b.gain_ratio;
    if (a.occurrence != b.occurrence) return a.occurrence > b.occurrence;
    return a.key < b.key;
  });
  if (ranked.size() > n) ranked.resize(n);
  return ranked;
}

void write_ranking_tsv(std::ostream& out, SkipPattern pattern, std::span<const RankedFeature> ranked) {
  char buf[64];
  for (const auto& r : ranked) {
    std::snprintf(buf, sizeof buf, "%.9f", r.gain_ratio);
    out << pattern_tag(pattern) << '\t' << r.key << '\t' << buf << '\t' << r.occurrence << '\n';
  }
}

}  // namespace skipvec
