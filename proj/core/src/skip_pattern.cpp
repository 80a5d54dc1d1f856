#include "skipvec/skip_pattern.hpp"

#include <stdexcept>

#include "skipvec/error.hpp"

namespace skipvec {

namespace {

struct PatternInfo {
  std::string_view tag;
  std::string_view compact;
  int depth;
  std::size_t arity;
};

constexpr std::array<PatternInfo, 9> kInfo = {{
    {"p", "p*", 1, 1},
    {"o", "*o", 1, 1},
    {"po", "po", 1, 2},
    {"*p", "*p*", 2, 1},
    {"*o", "**o", 2, 1},
    {"*po", "*po", 2, 2},
    {"pp", "pp*", 2, 2},
    {"ppo", "ppo", 2, 3},
    {"p*o", "p*o", 2, 2},
}};

const PatternInfo& info(SkipPattern sp) { return kInfo[static_cast<std::size_t>(sp)]; }

std::string positional_form(std::string_view compact) {
  // <s, p1, o1, ..., pd, od>; subject and o1..o(d-1) are always variables.
  std::string out = "<*";
  const std::size_t depth = compact.size() - 1;
  for (std::size_t i = 0; i < depth; ++i) {
    out += ',';
    out += compact[i];
    out += ',';
    out += (i + 1 == depth) ? compact[depth] : '*';
  }
  out += '>';
  return out;
}

PatternDescriptor describe(std::string compact) {
  PatternDescriptor d;
  d.depth = static_cast<int>(compact.size()) - 1;
  d.positional = positional_form(compact);
  auto sp = pattern_from_compact(compact);
  d.abbreviation = sp ? std::string(pattern_tag(*sp)) : compact;
  d.compact = std::move(compact);
  return d;
}

}  // namespace

std::string_view pattern_tag(SkipPattern sp) { return info(sp).tag; }
int pattern_depth(SkipPattern sp) { return info(sp).depth; }
std::size_t pattern_arity(SkipPattern sp) { return info(sp).arity; }

std::optional<SkipPattern> parse_pattern(std::string_view tag) {
  for (std::size_t i = 0; i < kInfo.size(); ++i) {
    if (kInfo[i].tag == tag) return static_cast<SkipPattern>(i);
  }
  return std::nullopt;
}

std::optional<SkipPattern> pattern_from_compact(std::string_view compact) {
  for (std::size_t i = 0; i < kInfo.size(); ++i) {
    if (kInfo[i].compact == compact) return static_cast<SkipPattern>(i);
  }
  return std::nullopt;
}

std::vector<SkipPattern> parse_pattern_list(std::string_view list) {
  if (list.empty() || list == "all") return {kAllPatterns.begin(), kAllPatterns.end()};
  std::vector<bool> wanted(kAllPatterns.size(), false);
  std::size_t start = 0;
  while (start <= list.size()) {
    auto comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    std::string_view tag = list.substr(start, comma - start);
    while (!tag.empty() && tag.front() == ' ') tag.remove_prefix(1);
    while (!tag.empty() && tag.back() == ' ') tag.remove_suffix(1);
    auto sp = parse_pattern(tag);
    if (!sp) throw Error("unknown Skip pattern '" + std::string(tag) + "'");
    wanted[static_cast<std::size_t>(*sp)] = true;
    start = comma + 1;
  }
  std::vector<SkipPattern> out;
  for (std::size_t i = 0; i < kAllPatterns.size(); ++i) {
    if (wanted[i]) out.push_back(kAllPatterns[i]);
  }
  return out;
}

std::vector<std::vector<PatternDescriptor>> pattern_census(int max_depth) {
  if (max_depth < 1) throw std::invalid_argument("pattern_census: max_depth must be >= 1");
  std::vector<std::vector<PatternDescriptor>> census;
  census.push_back({describe("p*"), describe("*o"), describe("po")});
  for (int depth = 2; depth <= max_depth; ++depth) {
    std::vector<PatternDescriptor> next;
    const auto& prev = census.back();
    for (char first : {'*', 'p'}) {
      for (const auto& d : prev) next.push_back(describe(first + d.compact));
    }
    census.push_back(std::move(next));
  }
  return census;
}

std::size_t census_total(const std::vector<std::vector<PatternDescriptor>>& census) {
  std::size_t total = 0;
  for (const auto& level : census) total += level.size();
  return total;
}

}  // namespace skipvec
