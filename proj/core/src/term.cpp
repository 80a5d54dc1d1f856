#include "skipvec/term.hpp"

namespace skipvec {

Term Term::plain_literal(std::string_view value) {
  std::string token;
  token.reserve(value.size() + 2);
  token.push_back('"');
  token.append(value);
  token.push_back('"');
  return literal(std::move(token));
}

std::string to_ntriples(const Term& term) {
  switch (term.kind) {
    case TermKind::Iri:
      return "<" + term.lexical + ">";
    case TermKind::BlankNode:
      return "_:" + term.lexical;
    case TermKind::Literal:
      return term.lexical;
  }
  return term.lexical;
}

TermId TermDictionary::intern(const Term& term) {
  auto it = ids_.find(term);
  if (it != ids_.end()) return it->second;
  const auto id = static_cast<TermId>(terms_.size());
  terms_.push_back(term);
  ids_.emplace(term, id);
  return id;
}

TermId TermDictionary::find(const Term& term) const {
  auto it = ids_.find(term);
  return it == ids_.end() ? kNoTerm : it->second;
}

}  // namespace skipvec
