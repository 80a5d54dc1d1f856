#ifndef SKIPVEC_FEATURE_HPP
#define SKIPVEC_FEATURE_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <string>

#include "skipvec/skip_pattern.hpp"
#include "skipvec/term.hpp"

namespace skipvec {

/// One Skip-pattern instance: the pattern plus the terms bound at its
/// non-variable positions, in pattern order (ppo -> (p, p', o'), *o -> (o')).
/// The subject is always a variable, so features are shared across resources.
struct Feature {
  SkipPattern pattern = SkipPattern::P;
  std::array<TermId, 3> slots{kNoTerm, kNoTerm, kNoTerm};

  std::size_t arity() const { return pattern_arity(pattern); }

  friend bool operator==(const Feature&, const Feature&) = default;
  friend auto operator<=>(const Feature&, const Feature&) = default;
};

inline Feature make_feature(SkipPattern sp, TermId a, TermId b = kNoTerm, TermId c = kNoTerm) {
  return Feature{sp, {a, b, c}};
}

struct FeatureHash {
  std::size_t operator()(const Feature& f) const noexcept {
    std::size_t h = static_cast<std::size_t>(f.pattern);
    for (TermId id : f.slots) h = h * 1000003u ^ id;
    return h;
  }
};

/// `tag|slot1|slot2|...` with slots in N-Triples form. Only the last slot can
/// be a literal, so the form stays injective without escaping.
std::string canonical_string(const Feature& feature, const TermDictionary& dict);

}  // namespace skipvec

#endif  // SKIPVEC_FEATURE_HPP
