#ifndef SKIPVEC_TERM_HPP
#define SKIPVEC_TERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace skipvec {

enum class TermKind : std::uint8_t { Iri, BlankNode, Literal };

/// An RDF term. For IRIs `lexical` is the IRI without angle brackets, for
/// blank nodes the label without `_:`, and for literals the verbatim
/// N-Triples token (quotes, escapes and any @lang / ^^<datatype> suffix).
struct Term {
  TermKind kind = TermKind::Iri;
  std::string lexical;

  static Term iri(std::string value) { return {TermKind::Iri, std::move(value)}; }
  static Term blank(std::string label) { return {TermKind::BlankNode, std::move(label)}; }
  /// `token` must already be a complete N-Triples literal, e.g. "\"red\"@en".
  static Term literal(std::string token) { return {TermKind::Literal, std::move(token)}; }
  /// Plain string literal; the value is wrapped in quotes without escaping.
  static Term plain_literal(std::string_view value);

  bool is_iri() const { return kind == TermKind::Iri; }
  bool is_blank() const { return kind == TermKind::BlankNode; }
  bool is_literal() const { return kind == TermKind::Literal; }

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term&, const Term&) = default;
};

/// N-Triples surface form: <iri>, _:label or the literal token.
std::string to_ntriples(const Term& term);

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept {
    return std::hash<std::string>{}(t.lexical) * 31u + static_cast<std::size_t>(t.kind);
  }
};

using TermId = std::uint32_t;
inline constexpr TermId kNoTerm = static_cast<TermId>(-1);

/// Interns terms so equal terms share one id.
class TermDictionary {
 public:
  TermId intern(const Term& term);
  TermId find(const Term& term) const;  // kNoTerm when absent
  const Term& term(TermId id) const { return terms_.at(id); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::vector<Term> terms_;
  std::unordered_map<Term, TermId, TermHash> ids_;
};

}  // namespace skipvec

#endif  // SKIPVEC_TERM_HPP
