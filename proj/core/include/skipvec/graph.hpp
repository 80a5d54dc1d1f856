#ifndef SKIPVEC_GRAPH_HPP
#define SKIPVEC_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "skipvec/term.hpp"

namespace skipvec {

struct TripleIds {
  TermId subject;
  TermId predicate;
  TermId object;

  friend bool operator==(const TripleIds&, const TripleIds&) = default;
  friend auto operator<=>(const TripleIds&, const TripleIds&) = default;
};

/// Outgoing (predicate, object) pair of a subject.
struct Edge {
  TermId predicate;
  TermId object;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Incoming (subject, predicate) pair of an object.
struct InEdge {
  TermId subject;
  TermId predicate;

  friend bool operator==(const InEdge&, const InEdge&) = default;
  friend auto operator<=>(const InEdge&, const InEdge&) = default;
};

/// Immutable set of RDF triples with subject and object indexes.
///
/// Term ids are assigned in sorted (kind, lexical) order at build time, so
/// everything derived from a graph is independent of triple insertion order.
/// Graphs derived with `filtered` share the dictionary of their parent.
class Graph {
 public:
  Graph();

  const TermDictionary& dictionary() const { return *dict_; }
  const Term& term(TermId id) const { return dict_->term(id); }
  TermId find(const Term& term) const { return dict_->find(term); }

  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  /// Sorted by (subject, predicate, object).
  std::span<const TripleIds> triples() const { return triples_; }
  bool contains(const Term& s, const Term& p, const Term& o) const;

  std::span<const Edge> outgoing(TermId subject) const;
  std::span<const Edge> outgoing(const Term& subject) const;
  std::span<const InEdge> incoming(TermId object) const;

  /// Number of distinct predicates (m) and distinct objects (n).
  std::size_t predicate_count() const { return predicate_count_; }
  std::size_t object_count() const { return object_count_; }

  /// Sorted ids of every term that occurs as a subject.
  std::vector<TermId> subjects() const;

  /// New graph with the triples for which `keep` is true.
  Graph filtered(const std::function<bool(const TripleIds&)>& keep) const;

  /// Canonical N-Triples text: one triple per line, sorted by term ids.
  std::string to_ntriples() const;

 private:
  friend class GraphBuilder;
  Graph(std::shared_ptr<const TermDictionary> dict, std::vector<TripleIds> sorted_unique);

  std::shared_ptr<const TermDictionary> dict_;
  std::vector<TripleIds> triples_;
  std::vector<std::size_t> out_offsets_;
  std::vector<Edge> out_edges_;
  std::vector<std::size_t> in_offsets_;
  std::vector<InEdge> in_edges_;
  std::size_t predicate_count_ = 0;
  std::size_t object_count_ = 0;
};

/// Accumulates triples and produces an immutable Graph.
class GraphBuilder {
 public:
  /// Throws StructuralError if the subject is a literal, the predicate is
  /// not an IRI, or an IRI / blank-node label is empty.
  void add(const Term& subject, const Term& predicate, const Term& object);
  std::size_t pending() const { return triples_.size(); }
  Graph build() &&;

 private:
  TermDictionary dict_;
  std::vector<TripleIds> triples_;
};

}  // namespace skipvec

#endif  // SKIPVEC_GRAPH_HPP
