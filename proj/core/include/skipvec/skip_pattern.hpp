#ifndef SKIPVEC_SKIP_PATTERN_HPP
#define SKIPVEC_SKIP_PATTERN_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace skipvec {

/// The nine Skip patterns of depth <= 2, in canonical (coordinate) order.
enum class SkipPattern : std::uint8_t { P, O, PO, StarP, StarO, StarPO, PP, PPO, PStarO };

inline constexpr std::array<SkipPattern, 9> kAllPatterns = {
    SkipPattern::P,     SkipPattern::O,      SkipPattern::PO,
    SkipPattern::StarP, SkipPattern::StarO,  SkipPattern::StarPO,
    SkipPattern::PP,    SkipPattern::PPO,    SkipPattern::PStarO};

std::string_view pattern_tag(SkipPattern sp);
std::optional<SkipPattern> parse_pattern(std::string_view tag);
/// Number of triples a pattern spans from the resource: 1 or 2.
int pattern_depth(SkipPattern sp);
/// Number of bound (non-variable) positions.
std::size_t pattern_arity(SkipPattern sp);
/// Parses a comma-separated tag list ("p,ppo"); "all" or empty means all nine.
std::vector<SkipPattern> parse_pattern_list(std::string_view list);

/// One Skip pattern of arbitrary depth. `compact` holds one symbol per
/// predicate p1..pd followed by one for the terminal object ('p' / 'o' for a
/// bound position, '*' for a variable). Subject and intermediate objects are
/// always variables and are not encoded.
struct PatternDescriptor {
  int depth = 0;
  std::string compact;
  std::string abbreviation;  // pattern tag for depth <= 2, compact form otherwise
  std::string positional;    // e.g. "<*,p,*,p,o>"
};

/// All Skip patterns with depth 1..max_depth, grouped by depth. Depth d+1 is
/// built from depth d by prepending a bound or variable first predicate.
std::vector<std::vector<PatternDescriptor>> pattern_census(int max_depth);
std::size_t census_total(const std::vector<std::vector<PatternDescriptor>>& census);

/// Maps a compact depth <= 2 form to the production pattern.
std::optional<SkipPattern> pattern_from_compact(std::string_view compact);

}  // namespace skipvec

#endif  // SKIPVEC_SKIP_PATTERN_HPP
