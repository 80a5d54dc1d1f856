#include "run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>

#include "skipvec/error.hpp"
#include "skipvec/ntriples.hpp"

namespace skipvec::cli {

namespace {

std::string normalize_key(std::string key) {
  std::replace(key.begin(), key.end(), '_', '-');
  return key;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_integer(const std::string& key, const std::string& value, T min) {
  T out{};
  auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || p != value.data() + value.size() || out < min) {
    throw Error("invalid value for '" + key + "': " + value);
  }
  return out;
}

double parse_real(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const double out = std::strtod(value.c_str(), &end);
  if (value.empty() || end != value.c_str() + value.size()) throw Error("invalid value for '" + key + "': " + value);
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw Error("invalid value for '" + key + "': " + value);
}

std::vector<Term> parse_predicates(const std::string& value) {
  std::vector<Term> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    auto comma = value.find(',', start);
    if (comma == std::string::npos) comma = value.size();
    const std::string item = trim(value.substr(start, comma - start));
    start = comma + 1;
    if (item.empty()) continue;
    if (item.front() == '<') {
      std::size_t pos = 0;
      auto term = parse_term(item, pos);
      if (!term || !term->is_iri() || pos != item.size()) throw Error("invalid leak predicate: " + item);
      out.push_back(*term);
    } else if (item.front() == '"' || item.starts_with("_:") || item.find_first_of(" \t") != std::string::npos) {
      throw Error("invalid leak predicate: " + item);
    } else {
      out.push_back(Term::iri(item));
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> known_keys() {
  return {"graph",     "labels",       "leak-predicates", "patterns",   "top-n",          "lambda",
          "min-count", "learner",      "k",               "trees",      "weak-depth",     "rounds",
          "max-depth", "min-leaf",     "folds",           "split",      "seed",           "out-dir",
          "global-selection", "resources", "noise",       "depth1-only", "shuffle-labels", "oracle-graphs",
          "oracle-depth", "inject-fault"};
}

void RunConfig::set(const std::string& raw_key, const std::string& raw_value) {
  const std::string key = normalize_key(trim(raw_key));
  const std::string value = trim(raw_value);
  if (key == "graph") graph_path = value;
  else if (key == "labels") labels_path = value;
  else if (key == "leak-predicates") leak_predicates = parse_predicates(value);
  else if (key == "patterns") pipeline.patterns = parse_pattern_list(value);
  else if (key == "top-n") {
    if (value == "all") pipeline.top_n.reset();
    else pipeline.top_n = parse_integer<std::size_t>(key, value, 0);
  } else if (key == "lambda") {
    const double l = parse_real(key, value);
    if (!(l > 0.0 && l <= 1.0)) throw Error("lambda must lie in (0, 1]: " + value);
    pipeline.lambda = l;
  } else if (key == "min-count") pipeline.min_count = parse_integer<std::size_t>(key, value, 1);
  else if (key == "learner") learner.kind = parse_learner(value);
  else if (key == "k") learner.k = parse_integer<std::size_t>(key, value, 1);
  else if (key == "trees") learner.trees = parse_integer<std::size_t>(key, value, 1);
  else if (key == "weak-depth") {
    learner.weak_depth = parse_integer<int>(key, value, 1);
    if (learner.weak_depth > 10) throw Error("weak-depth must lie in 1..10: " + value);
  } else if (key == "rounds") learner.rounds = parse_integer<std::size_t>(key, value, 1);
  else if (key == "max-depth") learner.max_depth = parse_integer<int>(key, value, -1);
  else if (key == "min-leaf") learner.min_leaf = parse_integer<std::size_t>(key, value, 1);
  else if (key == "folds") folds = parse_integer<std::size_t>(key, value, 2);
  else if (key == "split") {
    const double f = parse_real(key, value);
    if (!(f > 0.0 && f < 1.0)) throw Error("split must lie in (0, 1): " + value);
    split = f;
  } else if (key == "seed") seed = parse_integer<std::uint64_t>(key, value, 0);
  else if (key == "out-dir") out_dir = value;
  else if (key == "global-selection") global_selection = parse_bool(key, value);
  else if (key == "resources") resources = parse_integer<std::size_t>(key, value, 2);
  else if (key == "noise") {
    noise = parse_real(key, value);
    if (noise < 0.0) throw Error("noise must be >= 0: " + value);
  } else if (key == "depth1-only") depth1_only = parse_bool(key, value);
  else if (key == "shuffle-labels") shuffle_labels = parse_bool(key, value);
  else if (key == "oracle-graphs") oracle_graphs = parse_integer<std::size_t>(key, value, 1);
  else if (key == "oracle-depth") {
    max_depth = parse_integer<int>(key, value, 1);
    if (max_depth > 3) throw Error("oracle-depth must lie in 1..3: " + value);
  } else if (key == "inject-fault") inject_fault = parse_bool(key, value);
  else throw Error("unknown configuration key '" + raw_key + "'");
}

EvaluationConfig RunConfig::evaluation() const {
  EvaluationConfig ec;
  ec.pipeline = pipeline;
  ec.learner = learner;
  ec.folds = folds;
  ec.split = split;
  ec.seed = seed;
  ec.global_selection = global_selection;
  return ec;
}

void apply_config_file(std::istream& in, RunConfig& config) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    // A '#' after whitespace starts a trailing comment; IRIs such as
    // <...rdf-syntax-ns#type> keep theirs.
    for (std::size_t i = 1; i < line.size(); ++i) {
      if (line[i] == '#' && (line[i - 1] == ' ' || line[i - 1] == '\t')) {
        line.resize(i);
        break;
      }
    }
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, raw, "expected key = value");
    try {
      config.set(line.substr(0, eq), line.substr(eq + 1));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(line_no, raw, e.what());
    }
  }
}

void apply_config_file(const std::string& path, RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path);
  try {
    apply_config_file(in, config);
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

}  // namespace skipvec::cli
