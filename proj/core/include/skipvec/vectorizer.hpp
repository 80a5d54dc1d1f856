#ifndef SKIPVEC_VECTORIZER_HPP
#define SKIPVEC_VECTORIZER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skipvec/feature.hpp"
#include "skipvec/graph.hpp"
#include "skipvec/skip_pattern.hpp"

namespace skipvec {

/// Ordered selected features of one pattern; `offset` is its first
/// coordinate in the concatenated vector.
struct FeatureIndex {
  SkipPattern pattern = SkipPattern::P;
  std::vector<Feature> features;
  std::size_t offset = 0;
};

using Coordinate = std::uint32_t;
using SparseEntries = std::vector<std::pair<Coordinate, double>>;

/// Per-pattern indexes laid end to end in canonical pattern order.
class ConcatenatedIndex {
 public:
  ConcatenatedIndex() = default;

  const std::vector<FeatureIndex>& blocks() const { return blocks_; }
  std::size_t total_dim() const { return total_dim_; }
  std::optional<Coordinate> coordinate(const Feature& feature) const;
  const Feature& feature_at(Coordinate coord) const;
  /// Block holding `pattern`, if selected.
  const FeatureIndex* block(SkipPattern pattern) const;

 private:
  friend ConcatenatedIndex build_index(std::vector<FeatureIndex> selected);
  std::vector<FeatureIndex> blocks_;
  std::vector<Feature> by_coordinate_;
  std::unordered_map<Feature, Coordinate, FeatureHash> lookup_;
  std::size_t total_dim_ = 0;
};

/// Assigns cumulative offsets. Blocks must appear in canonical pattern order
/// with each pattern at most once; a feature repeated within a block or a
/// feature whose pattern differs from its block throws Error.
ConcatenatedIndex build_index(std::vector<FeatureIndex> selected);

struct SkipVector {
  Term resource;
  SparseEntries entries;  // ascending coordinates, non-zero values

  double value(Coordinate coord) const;
  std::vector<double> to_dense(std::size_t dim) const;
};

/// Coordinate i is lambda^(d-1) when the resource has feature i (d the
/// depth of its pattern), absent otherwise. lambda must lie in (0, 1].
SkipVector vectorize(const Graph& graph, const Term& resource, const ConcatenatedIndex& index, double lambda);
std::vector<SkipVector> vectorize_all(const Graph& graph, std::span<const Term> resources,
                                      const ConcatenatedIndex& index, double lambda);

/// `coord+1 \t pattern \t feature` per coordinate.
void write_dictionary(std::ostream& out, const ConcatenatedIndex& index, const TermDictionary& dict);

}  // namespace skipvec

#endif  // SKIPVEC_VECTORIZER_HPP
