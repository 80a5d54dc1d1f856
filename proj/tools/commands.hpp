#ifndef SKIPVEC_TOOLS_COMMANDS_HPP
#define SKIPVEC_TOOLS_COMMANDS_HPP

#include <ostream>

#include "run_config.hpp"

namespace skipvec::cli {

// Each command reads its inputs from the config, writes artifacts into
// config.out_dir, prints a short summary to `out` and warnings to `err`, and
// returns the process exit code. Failures throw skipvec::Error.

/// features.tsv (pattern, feature, occurrence) and feature_counts.tsv.
int cmd_extract(const RunConfig& config, std::ostream& out, std::ostream& err);
/// ranking.tsv (pattern, feature, gain ratio, occurrence).
int cmd_select(const RunConfig& config, std::ostream& out, std::ostream& err);
/// dataset.svm, dictionary.tsv and label_map.tsv.
int cmd_vectorize(const RunConfig& config, std::ostream& out, std::ostream& err);
/// report.tsv with per-fold accuracy, mean and stddev.
int cmd_evaluate(const RunConfig& config, std::ostream& out, std::ostream& err);
/// Returns 1 when any check is violated.
int cmd_oracle_check(const RunConfig& config, std::ostream& out, std::ostream& err);
/// graph.nt and labels.tsv of the planted-feature benchmark.
int cmd_generate(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace skipvec::cli

#endif  // SKIPVEC_TOOLS_COMMANDS_HPP
