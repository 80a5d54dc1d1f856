#include "skipvec/extract.hpp"

#include <algorithm>
#include <map>

#include "skipvec/parallel.hpp"

namespace skipvec {

namespace {

void sort_unique(std::vector<Feature>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Distinct depth-1 objects of s (F_o membership).
std::vector<TermId> first_hop_objects(std::span<const Edge> out) {
  std::vector<TermId> objects;
  objects.reserve(out.size());
  for (const auto& e : out) objects.push_back(e.object);
  std::sort(objects.begin(), objects.end());
  objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
  return objects;
}

}  // namespace

bool FeatureSet::contains(const Feature& f) const {
  return std::binary_search(features.begin(), features.end(), f);
}

std::vector<Feature> extract_ids(const Graph& graph, TermId resource, SkipPattern sp) {
  std::vector<Feature> out;
  const auto first = graph.outgoing(resource);
  if (first.empty()) return out;

  switch (sp) {
    case SkipPattern::P:
      for (const auto& e : first) out.push_back(make_feature(sp, e.predicate));
      break;
    case SkipPattern::O:
      for (const auto& e : first) out.push_back(make_feature(sp, e.object));
      break;
    case SkipPattern::PO:
      for (const auto& e : first) out.push_back(make_feature(sp, e.predicate, e.object));
      break;
    case SkipPattern::StarP:
    case SkipPattern::StarO:
    case SkipPattern::StarPO:
      for (TermId o : first_hop_objects(first)) {
        for (const auto& e : graph.outgoing(o)) {
          if (sp == SkipPattern::StarP) out.push_back(make_feature(sp, e.predicate));
          else if (sp == SkipPattern::StarO) out.push_back(make_feature(sp, e.object));
          else out.push_back(make_feature(sp, e.predicate, e.object));
        }
      }
      break;
    case SkipPattern::PP:
    case SkipPattern::PPO:
    case SkipPattern::PStarO:
      for (const auto& hop : first) {
        for (const auto& e : graph.outgoing(hop.object)) {
          if (sp == SkipPattern::PP) out.push_back(make_feature(sp, hop.predicate, e.predicate));
          else if (sp == SkipPattern::PPO) out.push_back(make_feature(sp, hop.predicate, e.predicate, e.object));
          else out.push_back(make_feature(sp, hop.predicate, e.object));
        }
      }
      break;
  }
  sort_unique(out);
  return out;
}

FeatureSet extract(const Graph& graph, const Term& resource, SkipPattern sp) {
  return FeatureSet{resource, sp, extract_ids(graph, graph.find(resource), sp)};
}

FeatureUnion extract_union(const Graph& graph, std::span<const Term> resources, SkipPattern sp) {
  std::vector<std::vector<Feature>> per_resource(resources.size());
  parallel_for(resources.size(), [&](std::size_t i) {
    per_resource[i] = extract_ids(graph, graph.find(resources[i]), sp);
  });

  std::map<Feature, std::vector<std::size_t>> membership;
  for (std::size_t i = 0; i < per_resource.size(); ++i) {
    for (const auto& f : per_resource[i]) membership[f].push_back(i);
  }

  FeatureUnion u;
  u.pattern = sp;
  u.features.reserve(membership.size());
  u.holders.reserve(membership.size());
  for (auto& [f, holders] : membership) {
    u.features.push_back(f);
    u.holders.push_back(std::move(holders));
  }
  return u;
}

}  // namespace skipvec
