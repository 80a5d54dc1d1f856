#ifndef SKIPVEC_TOOLS_RUN_CONFIG_HPP
#define SKIPVEC_TOOLS_RUN_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "skipvec/dataset.hpp"
#include "skipvec/pipeline.hpp"
#include "skipvec/term.hpp"

namespace skipvec::cli {

/// Everything a command needs. Populated from an optional `key = value`
/// config file, then overridden by command-line flags with the same names.
struct RunConfig {
  std::string graph_path;
  std::string labels_path;
  std::vector<Term> leak_predicates;
  PipelineConfig pipeline;
  LearnerConfig learner;
  std::size_t folds = 10;
  std::optional<double> split;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  bool global_selection = false;

  // generate
  std::size_t resources = 200;
  double noise = 0.2;
  bool depth1_only = false;
  bool shuffle_labels = false;

  // oracle-check
  std::size_t oracle_graphs = 100;
  int max_depth = 2;
  bool inject_fault = false;

  /// Sets one key. Keys are the long flag names without dashes; '_' and '-'
  /// are interchangeable. Throws Error on unknown keys or invalid values.
  void set(const std::string& key, const std::string& value);

  EvaluationConfig evaluation() const;
};

/// Reads `key = value` lines ('#' comments, blank lines allowed) into `config`.
void apply_config_file(std::istream& in, RunConfig& config);
void apply_config_file(const std::string& path, RunConfig& config);

std::vector<std::string> known_keys();

}  // namespace skipvec::cli

#endif  // SKIPVEC_TOOLS_RUN_CONFIG_HPP
