#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "run_config.hpp"
#include "skipvec/error.hpp"

namespace {

using skipvec::cli::RunConfig;
using Command = std::function<int(const RunConfig&, std::ostream&, std::ostream&)>;

const std::vector<std::string> kPipelineKeys = {"graph", "labels", "leak-predicates", "patterns", "top-n",
                                                "lambda", "min-count", "seed", "out-dir"};
const std::vector<std::string> kLearnerKeys = {"learner", "k",         "trees", "weak-depth", "rounds",
                                               "max-depth", "min-leaf", "folds", "split"};

struct Subcommand {
  CLI::App* app = nullptr;
  Command run;
  std::map<std::string, std::string> values;
  std::map<std::string, bool> flags;
  std::string config_path;
};

void add_keys(Subcommand& sub, const std::vector<std::string>& keys) {
  for (const auto& key : keys) sub.app->add_option("--" + key, sub.values[key]);
}

void add_flags(Subcommand& sub, const std::vector<std::string>& keys) {
  for (const auto& key : keys) sub.app->add_flag("--" + key, sub.flags[key]);
}

RunConfig resolve(const Subcommand& sub) {
  RunConfig config;
  if (!sub.config_path.empty()) skipvec::cli::apply_config_file(sub.config_path, config);
  for (const auto& [key, value] : sub.values) {
    if (sub.app->count("--" + key) > 0) config.set(key, value);
  }
  for (const auto& [key, on] : sub.flags) {
    if (on) config.set(key, "true");
  }
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skip-pattern feature extraction, selection and evaluation for RDF graphs"};
  app.require_subcommand(1);

  std::vector<Subcommand> subs;
  subs.reserve(6);
  auto add = [&](const std::string& name, const std::string& help, Command run) -> Subcommand& {
    Subcommand& sub = subs.emplace_back();
    sub.app = app.add_subcommand(name, help);
    sub.run = std::move(run);
    sub.app->add_option("--config", sub.config_path, "key = value file; flags override it");
    return sub;
  };

  add_keys(add("extract", "List features per pattern", skipvec::cli::cmd_extract), kPipelineKeys);
  add_keys(add("select", "Rank features by gain ratio", skipvec::cli::cmd_select), kPipelineKeys);
  add_keys(add("vectorize", "Write the sparse dataset", skipvec::cli::cmd_vectorize), kPipelineKeys);
  {
    Subcommand& sub = add("evaluate", "Cross-validate or split-evaluate a learner", skipvec::cli::cmd_evaluate);
    add_keys(sub, kPipelineKeys);
    add_keys(sub, kLearnerKeys);
    add_flags(sub, {"global-selection"});
  }
  {
    Subcommand& sub = add("oracle-check", "Compare extraction against brute force on random graphs",
                          skipvec::cli::cmd_oracle_check);
    add_keys(sub, {"seed", "oracle-graphs", "oracle-depth"});
    add_flags(sub, {"inject-fault"});
  }
  {
    Subcommand& sub = add("generate", "Write the planted-feature benchmark", skipvec::cli::cmd_generate);
    add_keys(sub, {"seed", "out-dir", "resources", "noise"});
    add_flags(sub, {"depth1-only", "shuffle-labels"});
  }

  CLI11_PARSE(app, argc, argv);

  for (const auto& sub : subs) {
    if (!sub.app->parsed()) continue;
    try {
      return sub.run(resolve(sub), std::cout, std::cerr);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 2;
    }
  }
  return 2;
}
