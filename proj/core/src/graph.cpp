#include "skipvec/graph.hpp"

#include <algorithm>
#include <numeric>

#include "skipvec/error.hpp"

namespace skipvec {

namespace {

void check_term(const Term& term, const char* position) {
  if (!term.is_literal() && term.lexical.empty()) {
    throw StructuralError(std::string("empty ") + (term.is_iri() ? "IRI" : "blank node label") +
                          " in " + position + " position");
  }
}

}  // namespace

Graph::Graph() : Graph(std::make_shared<const TermDictionary>(), {}) {}

Graph::Graph(std::shared_ptr<const TermDictionary> dict, std::vector<TripleIds> sorted_unique)
    : dict_(std::move(dict)), triples_(std::move(sorted_unique)) {
  const std::size_t terms = dict_->size();

  out_offsets_.assign(terms + 1, 0);
  in_offsets_.assign(terms + 1, 0);
  for (const auto& t : triples_) {
    ++out_offsets_[t.subject + 1];
    ++in_offsets_[t.object + 1];
  }
  std::partial_sum(out_offsets_.begin(), out_offsets_.end(), out_offsets_.begin());
  std::partial_sum(in_offsets_.begin(), in_offsets_.end(), in_offsets_.begin());

  // triples_ is sorted by (s, p, o), so each subject's block is already in (p, o) order.
  out_edges_.reserve(triples_.size());
  for (const auto& t : triples_) out_edges_.push_back({t.predicate, t.object});

  in_edges_.resize(triples_.size());
  std::vector<std::size_t> cursor(in_offsets_.begin(), in_offsets_.end() - 1);
  for (const auto& t : triples_) in_edges_[cursor[t.object]++] = {t.subject, t.predicate};
  for (std::size_t i = 0; i < terms; ++i) {
    std::sort(in_edges_.begin() + static_cast<std::ptrdiff_t>(in_offsets_[i]),
              in_edges_.begin() + static_cast<std::ptrdiff_t>(in_offsets_[i + 1]));
  }

  std::vector<bool> seen_p(terms, false), seen_o(terms, false);
  for (const auto& t : triples_) {
    if (!seen_p[t.predicate]) {
      seen_p[t.predicate] = true;
      ++predicate_count_;
    }
    if (!seen_o[t.object]) {
      seen_o[t.object] = true;
      ++object_count_;
    }
  }
}

bool Graph::contains(const Term& s, const Term& p, const Term& o) const {
  const TripleIds key{find(s), find(p), find(o)};
  if (key.subject == kNoTerm || key.predicate == kNoTerm || key.object == kNoTerm) return false;
  return std::binary_search(triples_.begin(), triples_.end(), key);
}

std::span<const Edge> Graph::outgoing(TermId subject) const {
  if (subject == kNoTerm || subject + 1 >= out_offsets_.size()) return {};
  return std::span<const Edge>(out_edges_).subspan(out_offsets_[subject],
                                                   out_offsets_[subject + 1] - out_offsets_[subject]);
}

std::span<const Edge> Graph::outgoing(const Term& subject) const { return outgoing(find(subject)); }

std::span<const InEdge> Graph::incoming(TermId object) const {
  if (object == kNoTerm || object + 1 >= in_offsets_.size()) return {};
  return std::span<const InEdge>(in_edges_).subspan(in_offsets_[object],
                                                    in_offsets_[object + 1] - in_offsets_[object]);
}

std::vector<TermId> Graph::subjects() const {
  std::vector<TermId> out;
  for (const auto& t : triples_) {
    if (out.empty() || out.back() != t.subject) out.push_back(t.subject);
  }
  return out;
}

Graph Graph::filtered(const std::function<bool(const TripleIds&)>& keep) const {
  std::vector<TripleIds> kept;
  kept.reserve(triples_.size());
  std::copy_if(triples_.begin(), triples_.end(), std::back_inserter(kept), keep);
  return Graph(dict_, std::move(kept));
}

std::string Graph::to_ntriples() const {
  std::string out;
  for (const auto& t : triples_) {
    out += skipvec::to_ntriples(term(t.subject));
    out += ' ';
    out += skipvec::to_ntriples(term(t.predicate));
    out += ' ';
    out += skipvec::to_ntriples(term(t.object));
    out += " .\n";
  }
  return out;
}

void GraphBuilder::add(const Term& subject, const Term& predicate, const Term& object) {
  if (subject.is_literal()) throw StructuralError("literal in subject position: " + subject.lexical);
  if (!predicate.is_iri()) {
    throw StructuralError("predicate must be an IRI: " + skipvec::to_ntriples(predicate));
  }
  check_term(subject, "subject");
  check_term(predicate, "predicate");
  check_term(object, "object");
  triples_.push_back({dict_.intern(subject), dict_.intern(predicate), dict_.intern(object)});
}

Graph GraphBuilder::build() && {
  const auto& terms = dict_.terms();
  std::vector<TermId> order(terms.size());
  std::iota(order.begin(), order.end(), TermId{0});
  std::sort(order.begin(), order.end(), [&](TermId a, TermId b) { return terms[a] < terms[b]; });

  auto dict = std::make_shared<TermDictionary>();
  std::vector<TermId> remap(terms.size());
  for (TermId old_id : order) remap[old_id] = dict->intern(terms[old_id]);

  for (auto& t : triples_) t = {remap[t.subject], remap[t.predicate], remap[t.object]};
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());

  return Graph(std::move(dict), std::move(triples_));
}

}  // namespace skipvec
