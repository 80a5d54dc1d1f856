#ifndef SKIPVEC_NTRIPLES_HPP
#define SKIPVEC_NTRIPLES_HPP

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "skipvec/graph.hpp"
#include "skipvec/term.hpp"

namespace skipvec {

/// Parses line-oriented N-Triples. Blank lines and lines starting with '#'
/// are skipped. Duplicate triples collapse. Throws ParseError carrying the
/// 1-based line number for malformed lines, including structural errors
/// such as a literal subject.
Graph parse_ntriples(std::istream& in);
Graph parse_ntriples(std::string_view text);
Graph load_ntriples_file(const std::string& path);

/// Parses one N-Triples term starting at `pos`, advancing `pos` past it.
/// Returns nullopt if no well-formed term starts there.
std::optional<Term> parse_term(std::string_view line, std::size_t& pos);

void write_ntriples(const Graph& graph, std::ostream& out);

}  // namespace skipvec

#endif  // SKIPVEC_NTRIPLES_HPP
