#ifndef SKIPVEC_EXTRACT_HPP
#define SKIPVEC_EXTRACT_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "skipvec/feature.hpp"
#include "skipvec/graph.hpp"
#include "skipvec/skip_pattern.hpp"

namespace skipvec {

struct FeatureSet {
  Term resource;
  SkipPattern pattern = SkipPattern::P;
  std::vector<Feature> features;  // sorted, unique

  bool contains(const Feature& f) const;
};

/// Feature set of one resource for one pattern. Depth-1 patterns read the
/// resource's outgoing pairs; *p / *o / *po continue from every depth-1
/// object; pp / ppo / p*o continue from every depth-1 (predicate, object)
/// pair and keep that predicate. A resource absent from the graph yields an
/// empty set.
FeatureSet extract(const Graph& graph, const Term& resource, SkipPattern sp);
std::vector<Feature> extract_ids(const Graph& graph, TermId resource, SkipPattern sp);

/// Union of feature sets over resources, with per-feature membership.
struct FeatureUnion {
  SkipPattern pattern = SkipPattern::P;
  std::vector<Feature> features;                // sorted, unique
  std::vector<std::vector<std::size_t>> holders;  // per feature: sorted positions into `resources`
};

FeatureUnion extract_union(const Graph& graph, std::span<const Term> resources, SkipPattern sp);

}  // namespace skipvec

#endif  // SKIPVEC_EXTRACT_HPP
