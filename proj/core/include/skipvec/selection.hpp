#ifndef SKIPVEC_SELECTION_HPP
#define SKIPVEC_SELECTION_HPP

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "skipvec/extract.hpp"
#include "skipvec/feature.hpp"
#include "skipvec/term.hpp"

namespace skipvec {

struct RankedFeature {
  Feature feature;
  std::string key;  // canonical string
  double gain_ratio = 0.0;
  std::size_t occurrence = 0;  // training resources holding the feature
};

/// Keeps features held by at least `min_count` training resources.
FeatureUnion filter_singletons(const FeatureUnion& features, std::size_t min_count);

/// Gain ratio of every feature in `features`, whose holder positions index
/// `class_of`. Output follows `features` order.
std::vector<RankedFeature> rank_features(const FeatureUnion& features, std::span<const std::size_t> class_of,
                                         std::size_t num_classes, const TermDictionary& dict);

/// Sorts by gain ratio descending, then occurrence descending, then key
/// ascending, and keeps the first min(n, size) entries.
std::vector<RankedFeature> select_top_n(std::vector<RankedFeature> ranked, std::size_t n);

/// `pattern \t feature \t gain_ratio(9 dp) \t occurrence` per line.
void write_ranking_tsv(std::ostream& out, SkipPattern pattern, std::span<const RankedFeature> ranked);

}  // namespace skipvec

#endif  // SKIPVEC_SELECTION_HPP
