#ifndef SKIPVEC_ORACLE_HPP
#define SKIPVEC_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "skipvec/feature.hpp"
#include "skipvec/graph.hpp"

namespace skipvec {

// Exhaustive feature-family generators. These follow the walk / skip-function
// definitions literally and serve as reference counts for the set-builder
// extraction in extract.hpp.

/// Element sequence <s, p1, o1, ..., pd, od>.
using Walk = std::vector<TermId>;
/// Walk with some positions replaced by a variable (kNoTerm).
using SkipSequence = std::vector<TermId>;

/// All walks of depth 1..max_depth from `start`. Walks may revisit nodes;
/// the depth-0 walk <s> is not included.
std::vector<Walk> enumerate_walks(const Graph& graph, TermId start, int max_depth);
std::vector<Walk> enumerate_walks(const Graph& graph, const Term& start, int max_depth);

/// Distinct PROs per depth (index d-1): the subject and intermediate objects
/// of every walk become variables.
std::vector<std::set<SkipSequence>> enumerate_pros(const Graph& graph, TermId start, int max_depth);

/// Distinct Skips per depth: every skip function applied to every PRO, except
/// those making both the terminal predicate and terminal object variables.
std::vector<std::set<SkipSequence>> enumerate_skips(const Graph& graph, TermId start, int max_depth);

/// Maps a depth <= 2 Skip to its pattern-tagged feature.
std::optional<Feature> skip_to_feature(const SkipSequence& skip);

enum class FeatureFamily { Walk, Pro, Skip, Subtree };
std::optional<FeatureFamily> parse_family(const std::string& name);

struct DepthCounts {
  std::vector<std::uint64_t> per_depth;  // index d-1
  std::uint64_t cumulative(int depth) const;
};

inline constexpr int kMaxOracleDepth = 3;
inline constexpr int kMaxSubtreeDepth = 2;
inline constexpr std::size_t kMaxSubtreePositions = 4;

/// Exact counts by exhaustive generation. Throws LimitError when max_depth
/// exceeds 3 (walk / pro / skip), or for subtrees when max_depth exceeds 2 or
/// the unfolded neighbourhood has more than 4 predicate-object positions.
/// Subtree counts are indexed by subtree height.
DepthCounts oracle_count(const Graph& graph, TermId start, FeatureFamily family, int max_depth);

/// Upper bounds for per-depth / cumulative counts given m predicates and n objects.
double walk_bound(std::size_t m, std::size_t n, int depth);            // (mn)^d
double pro_bound(std::size_t m, std::size_t n, int depth);             // m^d n
double skip_cumulative_bound(std::size_t m, std::size_t n, int depth);  // (m+n+mn)(2+m)^(d-1)
double subtree_cumulative_bound(std::size_t m, std::size_t n, int depth);

struct OracleCheckConfig {
  std::uint64_t seed = 42;
  std::size_t graphs = 100;
  std::size_t max_nodes = 30;
  std::size_t max_predicates = 5;
  int max_depth = 2;
  int census_depth = 4;
  bool inject_fault = false;  // harness self-test: corrupts the oracle counts
};

struct OracleCheckReport {
  std::size_t checks = 0;
  std::vector<std::string> violations;
  std::vector<std::string> lines;  // human-readable summary
  bool ok() const { return violations.empty(); }
};

/// Seeded random graphs: extraction vs skip-oracle equivalence, the walk /
/// PRO / Skip bounds, and pattern-census totals.
OracleCheckReport run_oracle_checks(const OracleCheckConfig& config);

}  // namespace skipvec

#endif  // SKIPVEC_ORACLE_HPP
