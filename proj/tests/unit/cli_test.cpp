#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "commands.hpp"
#include "run_config.hpp"
#include "skipvec/error.hpp"
#include "skipvec/sparse_io.hpp"
#include "test_support.hpp"

namespace skipvec::cli {
namespace {

using skipvec::testing::read_file;
using skipvec::testing::TempDir;
using skipvec::testing::write_file;

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, '\t');) out.push_back(cell);
  return out;
}

class FixtureRun : public ::testing::Test {
 protected:
  FixtureRun() : dir_(::testing::UnitTest::GetInstance()->current_test_info()->name()) {
    write_file(dir_.file("graph.nt"), example_fruit_graph());
    write_file(dir_.file("labels.tsv"), example_fruit_labels());
    config_.graph_path = dir_.file("graph.nt");
    config_.labels_path = dir_.file("labels.tsv");
    config_.out_dir = dir_.file("out");
  }

  int run(int (*cmd)(const RunConfig&, std::ostream&, std::ostream&)) {
    out_.str("");
    err_.str("");
    return cmd(config_, out_, err_);
  }

  std::string output(const std::string& name) const { return read_file(dir_.file("out/" + name)); }

  TempDir dir_;
  RunConfig config_;
  std::ostringstream out_, err_;
};

TEST(RunConfig, KeysAndValidation) {
  RunConfig c;
  c.set("top_n", "7");
  EXPECT_EQ(c.pipeline.top_n, 7u);
  c.set("top-n", "all");
  EXPECT_FALSE(c.pipeline.top_n.has_value());
  c.set("patterns", "ppo,p");
  EXPECT_EQ(c.pipeline.patterns.size(), 2u);
  c.set("learner", "rf");
  EXPECT_EQ(c.learner.kind, LearnerKind::Forest);
  c.set("leak-predicates", "<http://example.org/a>,<http://example.org/b>");
  EXPECT_EQ(c.leak_predicates.size(), 2u);
  EXPECT_THROW(c.set("colour", "red"), Error);
  EXPECT_THROW(c.set("lambda", "0"), Error);
  EXPECT_THROW(c.set("lambda", "1.01"), Error);
  EXPECT_THROW(c.set("k", "-1"), Error);
  EXPECT_THROW(c.set("folds", "1"), Error);
  EXPECT_THROW(c.set("split", "1"), Error);
  EXPECT_THROW(c.set("weak-depth", "11"), Error);
  EXPECT_THROW(c.set("seed", "abc"), Error);
  EXPECT_THROW(c.set("leak-predicates", "\"lit\""), Error);
}

TEST(RunConfig, FileThenOverrides) {
  std::istringstream file("# sweep\nlambda = 0.5\n\ntop_n = 1000\nlearner = ada  # boosted\n");
  RunConfig c;
  apply_config_file(file, c);
  EXPECT_DOUBLE_EQ(c.pipeline.lambda, 0.5);
  EXPECT_EQ(c.pipeline.top_n, 1000u);
  EXPECT_EQ(c.learner.kind, LearnerKind::AdaBoost);
  c.set("lambda", "0.2");
  EXPECT_DOUBLE_EQ(c.pipeline.lambda, 0.2);

  std::istringstream bad("lambda = 0.5\nwhatever\n");
  try {
    apply_config_file(bad, c);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  std::istringstream unknown("depth = 3\n");
  EXPECT_THROW(apply_config_file(unknown, c), Error);
}

TEST_F(FixtureRun, ExtractListsSevenPredicates) {
  config_.set("patterns", "p");
  ASSERT_EQ(run(cmd_extract), 0);
  const auto rows = lines_of(output("features.tsv"));
  EXPECT_EQ(rows.size(), 7u);
  for (const auto& row : rows) EXPECT_EQ(split_tabs(row)[0], "p");
  EXPECT_EQ(output("feature_counts.tsv"), "p\t7\n");
}

TEST_F(FixtureRun, ExtractRestrictedToPpo) {
  config_.set("patterns", "ppo");
  ASSERT_EQ(run(cmd_extract), 0);
  const auto rows = lines_of(output("features.tsv"));
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& row : rows) EXPECT_EQ(split_tabs(row)[0], "ppo");
}

TEST_F(FixtureRun, EmptyLabelFileIsAnError) {
  write_file(config_.labels_path, "# nothing\n");
  EXPECT_THROW(run(cmd_extract), Error);
}

TEST_F(FixtureRun, MissingGraphNamesThePath) {
  config_.graph_path = dir_.file("absent.nt");
  try {
    run(cmd_extract);
    FAIL() << "expected Error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("absent.nt"), std::string::npos);
  }
}

TEST_F(FixtureRun, MalformedGraphReportsLine) {
  write_file(config_.graph_path, "<a> <p> <b> .\n<a> <p> .\n");
  try {
    run(cmd_extract);
    FAIL() << "expected Error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST_F(FixtureRun, LeakPredicatesAreRemoved) {
  config_.set("patterns", "p");
  config_.set("leak-predicates", "<http://www.w3.org/1999/02/22-rdf-syntax-ns#type>");
  ASSERT_EQ(run(cmd_extract), 0);
  EXPECT_EQ(output("feature_counts.tsv"), "p\t6\n");
}

TEST_F(FixtureRun, SelectPerfectSplitterFirst) {
  write_file(config_.graph_path,
             "<r1> <mark> <yes> .\n<r2> <mark> <yes> .\n<r1> <common> <x> .\n<r2> <common> <x> .\n"
             "<r3> <common> <x> .\n<r4> <common> <x> .\n<r1> <half> <h> .\n<r3> <half> <h> .\n");
  write_file(config_.labels_path, "<r1>\tpos\n<r2>\tpos\n<r3>\tneg\n<r4>\tneg\n");
  config_.set("patterns", "p");
  ASSERT_EQ(run(cmd_select), 0);
  const auto first = split_tabs(lines_of(output("ranking.tsv")).at(0));
  EXPECT_EQ(first, (std::vector<std::string>{"p", "p|<mark>", "1.000000000", "2"}));
  EXPECT_TRUE(err_.str().empty());
}

TEST_F(FixtureRun, SelectTopNZeroWarns) {
  config_.set("top-n", "0");
  ASSERT_EQ(run(cmd_select), 0);
  EXPECT_EQ(output("ranking.tsv"), "");
  EXPECT_NE(err_.str().find("warning"), std::string::npos);
}

TEST_F(FixtureRun, SelectMinCountAboveEveryOccurrenceWarns) {
  write_file(config_.graph_path, "<r1> <p> <x> .\n<r2> <p> <x> .\n<r3> <q> <y> .\n<r4> <q> <y> .\n");
  write_file(config_.labels_path, "<r1>\ta\n<r2>\tb\n<r3>\ta\n<r4>\tb\n");
  config_.set("min-count", "3");
  ASSERT_EQ(run(cmd_select), 0);
  EXPECT_EQ(output("ranking.tsv"), "");
  EXPECT_NE(err_.str().find("empty ranking"), std::string::npos);
}

TEST_F(FixtureRun, SelectNeedsTwoClasses) {
  write_file(config_.labels_path, "<http://example.org/apple>\tfruit\n");
  EXPECT_THROW(run(cmd_select), Error);
}

std::map<std::string, std::string> dictionary_by_coord(const std::string& text) {
  std::map<std::string, std::string> out;
  for (const auto& line : lines_of(text)) {
    const auto cells = split_tabs(line);
    out[cells.at(0)] = cells.at(2);
  }
  return out;
}

TEST_F(FixtureRun, VectorizeAppleOverPredicateSequence) {
  config_.set("patterns", "p");
  config_.set("top-n", "all");
  config_.set("min-count", "1");
  ASSERT_EQ(run(cmd_vectorize), 0);
  EXPECT_EQ(output("label_map.tsv"), "1\tanimal\n2\tfruit\n");

  // Re-express apple's exported row in the order
  // [color, shape, rdf:type, like, live, taste, climb].
  const auto dict = dictionary_by_coord(output("dictionary.tsv"));
  ASSERT_EQ(dict.size(), 7u);
  std::istringstream data(output("dataset.svm"));
  const SparseDataset ds = read_sparse(data);
  ASSERT_EQ(ds.rows.size(), 2u);
  const SparseRow& apple = ds.rows[0];
  EXPECT_EQ(apple.label_id, 2u);
  std::map<std::string, double> by_feature;
  for (const auto& [c, v] : apple.entries) by_feature[dict.at(std::to_string(c + 1))] = v;
  std::vector<double> dense;
  for (const char* name : {"color", "shape", "", "like", "live", "taste", "climb"}) {
    const std::string key = *name ? "p|<http://example.org/" + std::string(name) + ">"
                                  : "p|<http://www.w3.org/1999/02/22-rdf-syntax-ns#type>";
    dense.push_back(by_feature.count(key) ? by_feature[key] : 0.0);
  }
  EXPECT_EQ(dense, (std::vector<double>{1, 1, 1, 0, 0, 1, 0}));
}

TEST_F(FixtureRun, VectorizeDiscountsDepthTwo) {
  config_.set("top-n", "all");
  config_.set("min-count", "1");
  config_.set("lambda", "0.3");
  ASSERT_EQ(run(cmd_vectorize), 0);
  std::map<std::string, std::string> pattern_of;
  for (const auto& line : lines_of(output("dictionary.tsv"))) {
    const auto cells = split_tabs(line);
    pattern_of[cells.at(0)] = cells.at(1);
  }
  std::istringstream data(output("dataset.svm"));
  std::size_t depth_two = 0;
  for (const auto& row : read_sparse(data).rows) {
    for (const auto& [c, v] : row.entries) {
      const auto sp = parse_pattern(pattern_of.at(std::to_string(c + 1)));
      ASSERT_TRUE(sp.has_value());
      EXPECT_EQ(v, pattern_depth(*sp) == 2 ? 0.3 : 1.0);
      depth_two += pattern_depth(*sp) == 2;
    }
  }
  EXPECT_GT(depth_two, 0u);
}

TEST_F(FixtureRun, RerunIsByteIdentical) {
  const PlantedBenchmark bench = planted_benchmark({.resources = 60});
  write_file(config_.graph_path, bench.ntriples);
  write_file(config_.labels_path, bench.labels_tsv);
  config_.set("learner", "rf");
  config_.set("trees", "5");
  config_.set("folds", "5");
  std::map<std::string, std::string> first;
  for (int pass = 0; pass < 2; ++pass) {
    ASSERT_EQ(run(cmd_select), 0);
    ASSERT_EQ(run(cmd_vectorize), 0);
    ASSERT_EQ(run(cmd_evaluate), 0);
    for (const char* name : {"ranking.tsv", "dataset.svm", "dictionary.tsv", "label_map.tsv", "report.tsv"}) {
      if (pass == 0) first[name] = output(name);
      else EXPECT_EQ(output(name), first[name]) << name;
    }
  }
}

TEST_F(FixtureRun, EvaluatePlantedBenchmark) {
  const PlantedBenchmark bench = planted_benchmark({});
  write_file(config_.graph_path, bench.ntriples);
  write_file(config_.labels_path, bench.labels_tsv);
  ASSERT_EQ(run(cmd_evaluate), 0);
  const auto rows = lines_of(output("report.tsv"));
  ASSERT_EQ(rows.size(), 13u);
  EXPECT_EQ(rows[11], "mean\t1.000000000");
  EXPECT_EQ(out_.str(), output("report.tsv"));
}

TEST_F(FixtureRun, EvaluateShuffledLabelsNearChance) {
  double total = 0.0;
  const int seeds = 5;
  for (int s = 1; s <= seeds; ++s) {
    config_.set("seed", std::to_string(s));
    config_.set("shuffle-labels", "true");
    config_.out_dir = dir_.file("gen");
    ASSERT_EQ(run(cmd_generate), 0);
    config_.graph_path = dir_.file("gen/graph.nt");
    config_.labels_path = dir_.file("gen/labels.tsv");
    config_.out_dir = dir_.file("out");
    ASSERT_EQ(run(cmd_evaluate), 0);
    const auto rows = lines_of(output("report.tsv"));
    total += std::stod(split_tabs(rows.at(rows.size() - 2)).at(1));
  }
  EXPECT_NEAR(total / seeds, 0.5, 0.15);
}

TEST_F(FixtureRun, EvaluateTooManyFoldsNamesClass) {
  std::string labels;
  for (int i = 0; i < 30; ++i) labels += "<http://example.org/r" + std::to_string(i) + ">\t" + (i < 10 ? "rare" : "common") + "\n";
  write_file(config_.labels_path, labels);
  config_.set("folds", "11");
  try {
    run(cmd_evaluate);
    FAIL() << "expected Error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("rare"), std::string::npos) << e.what();
  }
}

TEST_F(FixtureRun, OracleCheck) {
  config_.set("oracle-graphs", "20");
  EXPECT_EQ(run(cmd_oracle_check), 0);
  EXPECT_NE(out_.str().find("PASS"), std::string::npos);
  config_.set("inject-fault", "true");
  EXPECT_EQ(run(cmd_oracle_check), 1);
  EXPECT_NE(out_.str().find("VIOLATION"), std::string::npos);
}

TEST_F(FixtureRun, GenerateIsDeterministic) {
  ASSERT_EQ(run(cmd_generate), 0);
  const std::string graph = output("graph.nt"), labels = output("labels.tsv");
  ASSERT_EQ(run(cmd_generate), 0);
  EXPECT_EQ(output("graph.nt"), graph);
  EXPECT_EQ(output("labels.tsv"), labels);
  EXPECT_EQ(lines_of(labels).size(), 200u);
}

}  // namespace
}  // namespace skipvec::cli
