#include "skipvec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "skipvec/error.hpp"
#include "skipvec/extract.hpp"
#include "skipvec/skip_pattern.hpp"
#include "skipvec/synthetic.hpp"

namespace skipvec {

namespace {

void extend_walks(const Graph& graph, Walk& current, int remaining, std::vector<Walk>& out) {
  if (remaining == 0) return;
  const TermId tail = current.back();
  for (const auto& e : graph.outgoing(tail)) {
    current.push_back(e.predicate);
    current.push_back(e.object);
    out.push_back(current);
    extend_walks(graph, current, remaining - 1, out);
    current.pop_back();
    current.pop_back();
  }
}

void check_depth(int max_depth, int limit, const char* what) {
  if (max_depth < 0) throw std::invalid_argument("max_depth must be >= 0");
  if (max_depth > limit) {
    throw LimitError(std::string(what) + " enumeration refused: depth " + std::to_string(max_depth) +
                     " exceeds limit " + std::to_string(limit));
  }
}

int walk_depth(const Walk& w) { return static_cast<int>(w.size() / 2); }

SkipSequence to_pro(const Walk& walk) {
  SkipSequence pro = walk;
  // Positions 0 (subject) and 2, 4, ..., 2d-2 (intermediate objects).
  for (std::size_t i = 0; i + 1 < pro.size(); i += 2) pro[i] = kNoTerm;
  return pro;
}

// Subtree enumeration over the unfolded neighbourhood: each depth-1 position
// is either absent or present together with any subset of its depth-2
// positions. Subtrees are encoded as sorted position lists.
struct Position {
  std::size_t id;
  std::vector<std::size_t> children;
};

}  // namespace

std::vector<Walk> enumerate_walks(const Graph& graph, TermId start, int max_depth) {
  if (max_depth < 0) throw std::invalid_argument("max_depth must be >= 0");
  std::vector<Walk> out;
  if (start == kNoTerm) return out;
  Walk current{start};
  extend_walks(graph, current, max_depth, out);
  return out;
}

std::vector<Walk> enumerate_walks(const Graph& graph, const Term& start, int max_depth) {
  return enumerate_walks(graph, graph.find(start), max_depth);
}

std::vector<std::set<SkipSequence>> enumerate_pros(const Graph& graph, TermId start, int max_depth) {
  std::vector<std::set<SkipSequence>> out(static_cast<std::size_t>(max_depth));
  for (const auto& walk : enumerate_walks(graph, start, max_depth)) {
    out[static_cast<std::size_t>(walk_depth(walk) - 1)].insert(to_pro(walk));
  }
  return out;
}

std::vector<std::set<SkipSequence>> enumerate_skips(const Graph& graph, TermId start, int max_depth) {
  const auto pros = enumerate_pros(graph, start, max_depth);
  std::vector<std::set<SkipSequence>> out(pros.size());
  for (std::size_t level = 0; level < pros.size(); ++level) {
    for (const auto& pro : pros[level]) {
      // Bound positions of a PRO: predicates 1, 3, ..., 2d-1 and the terminal object 2d.
      std::vector<std::size_t> bound;
      for (std::size_t i = 1; i < pro.size(); i += 2) bound.push_back(i);
      bound.push_back(pro.size() - 1);
      const std::size_t terminal_p = pro.size() - 2;
      const std::size_t terminal_o = pro.size() - 1;

      for (std::uint32_t mask = 0; mask < (1u << bound.size()); ++mask) {
        SkipSequence skip = pro;
        bool erased_p = false, erased_o = false;
        for (std::size_t b = 0; b < bound.size(); ++b) {
          if (mask & (1u << b)) {
            skip[bound[b]] = kNoTerm;
            erased_p |= bound[b] == terminal_p;
            erased_o |= bound[b] == terminal_o;
          }
        }
        if (erased_p && erased_o) continue;
        out[level].insert(std::move(skip));
      }
    }
  }
  return out;
}

std::optional<Feature> skip_to_feature(const SkipSequence& skip) {
  if (skip.size() != 3 && skip.size() != 5) return std::nullopt;
  std::string compact;
  std::vector<TermId> slots;
  for (std::size_t i = 1; i < skip.size(); i += 2) {
    compact += skip[i] == kNoTerm ? '*' : 'p';
    if (skip[i] != kNoTerm) slots.push_back(skip[i]);
  }
  compact += skip.back() == kNoTerm ? '*' : 'o';
  if (skip.back() != kNoTerm) slots.push_back(skip.back());
  auto sp = pattern_from_compact(compact);
  if (!sp) return std::nullopt;
  Feature f;
  f.pattern = *sp;
  std::copy(slots.begin(), slots.end(), f.slots.begin());
  return f;
}

std::optional<FeatureFamily> parse_family(const std::string& name) {
  if (name == "walk") return FeatureFamily::Walk;
  if (name == "pro") return FeatureFamily::Pro;
  if (name == "skip") return FeatureFamily::Skip;
  if (name == "subtree") return FeatureFamily::Subtree;
  return std::nullopt;
}

std::uint64_t DepthCounts::cumulative(int depth) const {
  std::uint64_t total = 0;
  for (int d = 0; d < depth && d < static_cast<int>(per_depth.size()); ++d) total += per_depth[d];
  return total;
}

DepthCounts oracle_count(const Graph& graph, TermId start, FeatureFamily family, int max_depth) {
  DepthCounts counts;
  counts.per_depth.assign(static_cast<std::size_t>(std::max(max_depth, 0)), 0);

  switch (family) {
    case FeatureFamily::Walk: {
      check_depth(max_depth, kMaxOracleDepth, "walk");
      for (const auto& w : enumerate_walks(graph, start, max_depth)) ++counts.per_depth[walk_depth(w) - 1];
      break;
    }
    case FeatureFamily::Pro: {
      check_depth(max_depth, kMaxOracleDepth, "PRO");
      const auto pros = enumerate_pros(graph, start, max_depth);
      for (std::size_t d = 0; d < pros.size(); ++d) counts.per_depth[d] = pros[d].size();
      break;
    }
    case FeatureFamily::Skip: {
      check_depth(max_depth, kMaxOracleDepth, "Skip");
      const auto skips = enumerate_skips(graph, start, max_depth);
      for (std::size_t d = 0; d < skips.size(); ++d) counts.per_depth[d] = skips[d].size();
      break;
    }
    case FeatureFamily::Subtree: {
      check_depth(max_depth, kMaxSubtreeDepth, "subtree");
      const auto walks = enumerate_walks(graph, start, max_depth);
      if (walks.size() > kMaxSubtreePositions) {
        throw LimitError("subtree enumeration refused: " + std::to_string(walks.size()) +
                         " predicate-object positions exceed limit " +
                         std::to_string(kMaxSubtreePositions));
      }
      // enumerate_walks emits each depth-1 walk followed by its extensions.
      std::vector<Position> roots;
      for (std::size_t i = 0; i < walks.size(); ++i) {
        if (walk_depth(walks[i]) == 1) roots.push_back({i, {}});
        else roots.back().children.push_back(i);
      }

      std::set<std::vector<std::size_t>> subtrees;
      std::vector<std::size_t> chosen;
      auto recurse = [&](auto&& self, std::size_t r) -> void {
        if (r == roots.size()) {
          if (!chosen.empty()) {
            auto key = chosen;
            std::sort(key.begin(), key.end());
            subtrees.insert(std::move(key));
          }
          return;
        }
        self(self, r + 1);  // position r absent
        const auto& kids = roots[r].children;
        for (std::uint32_t mask = 0; mask < (1u << kids.size()); ++mask) {
          const std::size_t before = chosen.size();
          chosen.push_back(roots[r].id);
          for (std::size_t k = 0; k < kids.size(); ++k) {
            if (mask & (1u << k)) chosen.push_back(kids[k]);
          }
          self(self, r + 1);
          chosen.resize(before);
        }
      };
      recurse(recurse, 0);

      for (const auto& tree : subtrees) {
        const bool deep = std::any_of(tree.begin(), tree.end(), [&](std::size_t p) {
          return walk_depth(walks[p]) == 2;
        });
        ++counts.per_depth[deep ? 1 : 0];
      }
      break;
    }
  }
  return counts;
}

double walk_bound(std::size_t m, std::size_t n, int depth) {
  return std::pow(static_cast<double>(m) * static_cast<double>(n), depth);
}

double pro_bound(std::size_t m, std::size_t n, int depth) {
  return std::pow(static_cast<double>(m), depth) * static_cast<double>(n);
}

double skip_cumulative_bound(std::size_t m, std::size_t n, int depth) {
  const double md = static_cast<double>(m), nd = static_cast<double>(n);
  return (md + nd + md * nd) * std::pow(2.0 + md, depth - 1);
}

double subtree_cumulative_bound(std::size_t m, std::size_t n, int depth) {
  const double mn = static_cast<double>(m) * static_cast<double>(n);
  return std::pow(std::pow(2.0, mn) + (depth - 1), std::pow(mn, depth - 1)) - 1.0;
}

OracleCheckReport run_oracle_checks(const OracleCheckConfig& config) {
  OracleCheckReport report;
  std::mt19937_64 rng(config.seed);
  std::size_t equivalence_checks = 0, bound_checks = 0;

  auto violation = [&](const std::string& msg) { report.violations.push_back(msg); };

  for (std::size_t g = 0; g < config.graphs; ++g) {
    RandomGraphOptions opts;
    opts.nodes = 2 + rng() % (config.max_nodes - 1);
    opts.predicates = 1 + rng() % config.max_predicates;
    opts.triples = 1 + rng() % (3 * opts.nodes);
    opts.seed = rng();
    const Graph graph = random_graph(opts);
    const std::size_t m = graph.predicate_count(), n = graph.object_count();

    for (TermId s : graph.subjects()) {
      const auto skips = enumerate_skips(graph, s, config.max_depth);
      const auto pros = enumerate_pros(graph, s, config.max_depth);
      auto walks = oracle_count(graph, s, FeatureFamily::Walk, config.max_depth);
      if (config.inject_fault) walks.per_depth[0] += static_cast<std::uint64_t>(walk_bound(m, n, 1)) + 1;

      for (int d = 1; d <= config.max_depth; ++d) {
        const auto idx = static_cast<std::size_t>(d - 1);
        ++bound_checks;
        if (static_cast<double>(walks.per_depth[idx]) > walk_bound(m, n, d)) {
          violation("graph " + std::to_string(g) + ": walk count at depth " + std::to_string(d) +
                    " exceeds (mn)^d");
        }
        if (static_cast<double>(pros[idx].size()) > pro_bound(m, n, d)) {
          violation("graph " + std::to_string(g) + ": PRO count at depth " + std::to_string(d) +
                    " exceeds m^d n");
        }
        std::uint64_t cumulative = 0;
        for (std::size_t k = 0; k <= idx; ++k) cumulative += skips[k].size();
        if (static_cast<double>(cumulative) > skip_cumulative_bound(m, n, d)) {
          violation("graph " + std::to_string(g) + ": cumulative Skip count to depth " + std::to_string(d) +
                    " exceeds (m+n+mn)(2+m)^(d-1)");
        }
      }

      if (config.max_depth <= 2) {
        std::vector<std::set<Feature>> by_pattern(kAllPatterns.size());
        for (const auto& level : skips) {
          for (const auto& skip : level) {
            if (auto f = skip_to_feature(skip)) by_pattern[static_cast<std::size_t>(f->pattern)].insert(*f);
          }
        }
        for (SkipPattern sp : kAllPatterns) {
          if (pattern_depth(sp) > config.max_depth) continue;
          ++equivalence_checks;
          const auto extracted = extract_ids(graph, s, sp);
          const auto& expected = by_pattern[static_cast<std::size_t>(sp)];
          if (!std::equal(extracted.begin(), extracted.end(), expected.begin(), expected.end())) {
            violation("graph " + std::to_string(g) + ": extract(" + to_ntriples(graph.term(s)) + ", " +
                      std::string(pattern_tag(sp)) + ") differs from the skip oracle");
          }
        }
      }
    }
  }

  const auto census = pattern_census(config.census_depth);
  for (int d = 1; d <= config.census_depth; ++d) {
    std::vector<std::vector<PatternDescriptor>> prefix(census.begin(), census.begin() + d);
    const std::size_t expected = 3 * (std::size_t{1} << d) - 3;
    if (census_total(prefix) != expected) {
      violation("pattern census to depth " + std::to_string(d) + " is " +
                std::to_string(census_total(prefix)) + ", expected " + std::to_string(expected));
    }
  }
  if (config.census_depth >= 2) {
    std::set<std::string> table;
    for (int d = 0; d < 2; ++d) {
      for (const auto& p : census[d]) table.insert(p.abbreviation);
    }
    std::set<std::string> expected;
    for (SkipPattern sp : kAllPatterns) expected.insert(std::string(pattern_tag(sp)));
    if (table != expected) violation("depth <= 2 census does not match the nine production patterns");
  }

  report.checks = equivalence_checks + bound_checks + static_cast<std::size_t>(config.census_depth) + 1;
  report.lines.push_back("graphs\t" + std::to_string(config.graphs));
  report.lines.push_back("equivalence_checks\t" + std::to_string(equivalence_checks));
  report.lines.push_back("bound_checks\t" + std::to_string(bound_checks));
  for (int d = 1; d <= config.census_depth; ++d) {
    std::size_t total = 0;
    for (int k = 0; k < d; ++k) total += census[k].size();
    report.lines.push_back("census_d" + std::to_string(d) + "\t" + std::to_string(total));
  }
  report.lines.push_back("violations\t" + std::to_string(report.violations.size()));
  return report;
}

}  // namespace skipvec
