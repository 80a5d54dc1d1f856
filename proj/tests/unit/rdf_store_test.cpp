#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "skipvec/error.hpp"
#include "skipvec/labels.hpp"
#include "skipvec/ntriples.hpp"
#include "test_support.hpp"

namespace skipvec {
namespace {

using testing::ex;

std::set<std::pair<Term, Term>> outgoing_terms(const Graph& g, const Term& s) {
  std::set<std::pair<Term, Term>> out;
  for (const Edge& e : g.outgoing(s)) out.emplace(g.term(e.predicate), g.term(e.object));
  return out;
}

std::set<std::tuple<Term, Term, Term>> triple_set(const Graph& g) {
  std::set<std::tuple<Term, Term, Term>> out;
  for (const auto& t : g.triples()) out.emplace(g.term(t.subject), g.term(t.predicate), g.term(t.object));
  return out;
}

TEST(ParseNTriples, SingleTriple) {
  const Graph g = parse_ntriples("<a> <p> <b> .\n");
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.predicate_count(), 1u);
  EXPECT_EQ(g.object_count(), 1u);
}

TEST(ParseNTriples, DuplicateLinesCollapse) {
  const Graph g = parse_ntriples("<a> <p> <b> .\n<a> <p> <b> .\n");
  EXPECT_EQ(g.size(), 1u);
}

TEST(ParseNTriples, MissingObjectReportsLine) {
  try {
    parse_ntriples("<a> <p> .\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.text(), "<a> <p> .");
  }
}

TEST(ParseNTriples, LineNumbersCountCommentsAndBlanks) {
  try {
    parse_ntriples("# header\n\n<a> <p> <b> .\n<a> <p> <b>\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
}

TEST(ParseNTriples, LiteralSubjectIsRejected) {
  EXPECT_THROW(parse_ntriples("\"x\" <p> <b> .\n"), ParseError);
}

TEST(ParseNTriples, BlankNodePredicateIsRejected) {
  EXPECT_THROW(parse_ntriples("<a> _:p <b> .\n"), ParseError);
}

TEST(ParseNTriples, LiteralsKeepDatatypeAndLanguage) {
  const Graph g = parse_ntriples(
      "<a> <p> \"1\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n"
      "<a> <p> \"1\" .\n"
      "<a> <p> \"1\"@en .\n"
      "<a> <p> \"q \\\"x\\\"\" .\n");
  EXPECT_EQ(g.size(), 4u);
  EXPECT_TRUE(g.contains(Term::iri("a"), Term::iri("p"), Term::literal("\"1\"@en")));
  EXPECT_TRUE(g.contains(Term::iri("a"), Term::iri("p"), Term::literal("\"q \\\"x\\\"\"")));
}

TEST(GraphBuilder, RejectsStructuralViolations) {
  GraphBuilder b;
  EXPECT_THROW(b.add(Term::plain_literal("x"), ex("p"), ex("o")), StructuralError);
  EXPECT_THROW(b.add(ex("s"), Term::blank("p"), ex("o")), StructuralError);
  EXPECT_THROW(b.add(Term::iri(""), ex("p"), ex("o")), StructuralError);
  EXPECT_THROW(b.add(ex("s"), ex("p"), Term::blank("")), StructuralError);
}

TEST(Outgoing, FixtureApple) {
  const Graph g = testing::fruit_graph();
  const auto pairs = outgoing_terms(g, ex("apple"));
  EXPECT_EQ(pairs.size(), 5u);
  EXPECT_TRUE(pairs.count({ex("color"), ex("red")}));
  EXPECT_TRUE(pairs.count({testing::rdf_type(), ex("fruits")}));
}

TEST(Outgoing, FixtureFruits) {
  const Graph g = testing::fruit_graph();
  const std::set<std::pair<Term, Term>> expected{{testing::subclass_of(), ex("foods")}};
  EXPECT_EQ(outgoing_terms(g, ex("fruits")), expected);
}

TEST(Outgoing, AbsentSubjectIsEmpty) {
  const Graph g = testing::fruit_graph();
  EXPECT_TRUE(g.outgoing(ex("pear")).empty());
  EXPECT_TRUE(g.outgoing(ex("red")).empty());
}

TEST(Outgoing, MatchesLinearScanOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 40; ++round) {
    const std::size_t count = 1 + rng() % 1000;
    const auto text = testing::random_text_triples(rng, count, 2 + rng() % 60, 1 + rng() % 8);
    const Graph g = parse_ntriples(testing::to_text(text));
    const auto all = triple_set(g);
    ASSERT_LE(g.size(), count);

    std::set<Term> subjects;
    for (const auto& [s, p, o] : all) subjects.insert(s);
    subjects.insert(ex("never-seen"));
    for (const Term& s : subjects) {
      std::set<std::pair<Term, Term>> scan;
      for (const auto& [ts, tp, to] : all) {
        if (ts == s) scan.emplace(tp, to);
      }
      ASSERT_EQ(outgoing_terms(g, s), scan) << to_ntriples(s);
    }

    std::set<Term> preds, objs;
    for (const auto& [s, p, o] : all) {
      preds.insert(p);
      objs.insert(o);
    }
    ASSERT_EQ(g.predicate_count(), preds.size());
    ASSERT_EQ(g.object_count(), objs.size());
  }
}

TEST(Graph, IncomingMirrorsOutgoing) {
  const Graph g = testing::fruit_graph();
  std::size_t in_total = 0;
  for (TermId id = 0; id < g.dictionary().size(); ++id) {
    for (const InEdge& e : g.incoming(id)) {
      ++in_total;
      EXPECT_TRUE(g.contains(g.term(e.subject), g.term(e.predicate), g.term(id)));
    }
  }
  EXPECT_EQ(in_total, g.size());
}

TEST(Graph, CanonicalTextRoundTrips) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 30; ++round) {
    const auto text = testing::random_text_triples(rng, 1 + rng() % 300, 2 + rng() % 40, 1 + rng() % 6);
    const Graph g = parse_ntriples(testing::to_text(text));
    const std::string canonical = g.to_ntriples();
    const Graph again = parse_ntriples(canonical);
    ASSERT_EQ(triple_set(again), triple_set(g));
    ASSERT_EQ(again.to_ntriples(), canonical);
  }
}

TEST(Graph, InsertionOrderDoesNotMatter) {
  std::mt19937_64 rng(17);
  auto text = testing::random_text_triples(rng, 200, 20, 4);
  const Graph a = parse_ntriples(testing::to_text(text));
  std::shuffle(text.begin(), text.end(), rng);
  const Graph b = parse_ntriples(testing::to_text(text));
  EXPECT_EQ(a.to_ntriples(), b.to_ntriples());
}

TEST(LoadLabels, SortsClasses) {
  const auto labels = load_labels("<apple>\tfruit\n<monkey>\tanimal\n");
  EXPECT_EQ(labels.size(), 2u);
  EXPECT_EQ(labels.classes(), (std::vector<std::string>{"animal", "fruit"}));
  EXPECT_EQ(labels.class_of(Term::iri("apple")), 1u);
  EXPECT_EQ(labels.class_of(Term::iri("monkey")), 0u);
}

TEST(LoadLabels, IdenticalDuplicateCollapses) {
  EXPECT_EQ(load_labels("<apple>\tfruit\n<apple>\tfruit\n").size(), 1u);
}

TEST(LoadLabels, ConflictIsAnError) {
  try {
    load_labels("<apple>\tfruit\n<apple>\tanimal\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(LoadLabels, MalformedLineReportsLine) {
  try {
    load_labels("<apple>\tfruit\n<monkey> animal\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(load_labels("\"lit\"\tfruit\n"), ParseError);
}

TEST(RemoveLabelLeak, DropsTargetTypeTriple) {
  const Graph g = testing::fruit_graph();
  const auto targets = LabeledResources::from_pairs({{ex("apple"), "fruit"}});
  const Graph out = remove_label_leak_triples(g, targets, {testing::rdf_type()});

  // Set-difference oracle over the fixture triples.
  auto expected = triple_set(g);
  expected.erase({ex("apple"), testing::rdf_type(), ex("fruits")});
  EXPECT_EQ(triple_set(out), expected);
  EXPECT_TRUE(out.contains(ex("fruits"), testing::subclass_of(), ex("foods")));
  EXPECT_TRUE(out.contains(ex("monkey"), testing::rdf_type(), ex("animals")));
}

TEST(RemoveLabelLeak, EmptyPredicateSetIsNoOp) {
  const Graph g = testing::fruit_graph();
  const auto targets = load_labels(example_fruit_labels());
  EXPECT_EQ(remove_label_leak_triples(g, targets, {}).to_ntriples(), g.to_ntriples());
}

TEST(RemoveLabelLeak, UnmatchedPredicateLeavesGraph) {
  const Graph g = testing::fruit_graph();
  const auto targets = LabeledResources::from_pairs({{ex("monkey"), "animal"}});
  EXPECT_EQ(remove_label_leak_triples(g, targets, {ex("color")}).to_ntriples(), g.to_ntriples());
}

TEST(RemoveLabelLeak, NeverTouchesUnlabeledSubjects) {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 30; ++round) {
    const Graph g = parse_ntriples(testing::to_text(testing::random_text_triples(rng, 150, 15, 4)));
    std::vector<std::pair<Term, std::string>> pairs;
    for (TermId s : g.subjects()) {
      if (rng() % 3 == 0) pairs.emplace_back(g.term(s), rng() % 2 ? "x" : "y");
    }
    const auto targets = LabeledResources::from_pairs(pairs);
    std::vector<Term> preds{Term::iri("http://example.org/p" + std::to_string(rng() % 4))};
    const Graph out = remove_label_leak_triples(g, targets, preds);
    ASSERT_LE(out.size(), g.size());
    const auto kept = triple_set(out);
    for (const auto& [s, p, o] : triple_set(g)) {
      const bool leak = targets.class_of(s).has_value() && p == preds[0];
      ASSERT_EQ(kept.count({s, p, o}) == 1, !leak);
    }
  }
}

}  // namespace
}  // namespace skipvec
