#include "skipvec/vectorizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "skipvec/error.hpp"
#include "skipvec/extract.hpp"
#include "skipvec/parallel.hpp"

namespace skipvec {

std::optional<Coordinate> ConcatenatedIndex::coordinate(const Feature& feature) const {
  auto it = lookup_.find(feature);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

const Feature& ConcatenatedIndex::feature_at(Coordinate coord) const { return by_coordinate_.at(coord); }

const FeatureIndex* ConcatenatedIndex::block(SkipPattern pattern) const {
  for (const auto& b : blocks_) {
    if (b.pattern == pattern) return &b;
  }
  return nullptr;
}

ConcatenatedIndex build_index(std::vector<FeatureIndex> selected) {
  ConcatenatedIndex index;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    auto& block = selected[i];
    if (i > 0 && !(selected[i - 1].pattern < block.pattern)) {
      throw Error("build_index: pattern blocks must follow canonical order without repeats (got '" +
                  std::string(pattern_tag(block.pattern)) + "' after '" +
                  std::string(pattern_tag(selected[i - 1].pattern)) + "')");
    }
    block.offset = offset;
    for (std::size_t k = 0; k < block.features.size(); ++k) {
      const Feature& f = block.features[k];
      if (f.pattern != block.pattern) {
        throw Error("build_index: feature of pattern '" + std::string(pattern_tag(f.pattern)) +
                    "' in block '" + std::string(pattern_tag(block.pattern)) + "'");
      }
      const auto coord = static_cast<Coordinate>(offset + k);
      if (!index.lookup_.emplace(f, coord).second) {
        throw Error("build_index: duplicate feature in pattern '" + std::string(pattern_tag(block.pattern)) + "'");
      }
      index.by_coordinate_.push_back(f);
    }
    offset += block.features.size();
  }
  index.total_dim_ = offset;
  index.blocks_ = std::move(selected);
  return index;
}

double SkipVector::value(Coordinate coord) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), coord,
                             [](const auto& e, Coordinate c) { return e.first < c; });
  return it != entries.end() && it->first == coord ? it->second : 0.0;
}

std::vector<double> SkipVector::to_dense(std::size_t dim) const {
  std::vector<double> out(dim, 0.0);
  for (const auto& [c, v] : entries) out.at(c) = v;
  return out;
}

SkipVector vectorize(const Graph& graph, const Term& resource, const ConcatenatedIndex& index, double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::invalid_argument("vectorize: lambda must lie in (0, 1]");
  SkipVector vec{resource, {}};
  const TermId id = graph.find(resource);
  if (id == kNoTerm) return vec;
  for (const auto& block : index.blocks()) {
    if (block.features.empty()) continue;
    const double value = std::pow(lambda, pattern_depth(block.pattern) - 1);
    for (const auto& f : extract_ids(graph, id, block.pattern)) {
      if (auto coord = index.coordinate(f)) vec.entries.emplace_back(*coord, value);
    }
  }
  std::sort(vec.entries.begin(), vec.entries.end());
  return vec;
}

std::vector<SkipVector> vectorize_all(const Graph& graph, std::span<const Term> resources,
                                      const ConcatenatedIndex& index, double lambda) {
  std::vector<SkipVector> out(resources.size());
  parallel_for(resources.size(), [&](std::size_t i) { out[i] = vectorize(graph, resources[i], index, lambda); });
  return out;
}

void write_dictionary(std::ostream& out, const ConcatenatedIndex& index, const TermDictionary& dict) {
  for (const auto& block : index.blocks()) {
    for (std::size_t k = 0; k < block.features.size(); ++k) {
      out << (block.offset + k + 1) << '\t' << pattern_tag(block.pattern) << '\t'
          << canonical_string(block.features[k], dict) << '\n';
    }
  }
}

}  // namespace skipvec
