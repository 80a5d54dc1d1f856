#include "skipvec/ntriples.hpp"

#include <fstream>
#include <sstream>

#include "skipvec/error.hpp"

namespace skipvec {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t'; }

void skip_spaces(std::string_view line, std::size_t& pos) {
  while (pos < line.size() && is_space(line[pos])) ++pos;
}

bool is_lang_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-';
}

std::optional<std::string> read_iri(std::string_view line, std::size_t& pos) {
  if (pos >= line.size() || line[pos] != '<') return std::nullopt;
  const auto close = line.find('>', pos + 1);
  if (close == std::string_view::npos) return std::nullopt;
  std::string_view body = line.substr(pos + 1, close - pos - 1);
  for (char c : body) {
    if (is_space(c) || c == '<' || c == '"') return std::nullopt;
  }
  pos = close + 1;
  return std::string(body);
}

}  // namespace

std::optional<Term> parse_term(std::string_view line, std::size_t& pos) {
  if (pos >= line.size()) return std::nullopt;
  const char c = line[pos];
  if (c == '<') {
    auto iri = read_iri(line, pos);
    if (!iri) return std::nullopt;
    return Term::iri(std::move(*iri));
  }
  if (c == '_') {
    if (line.substr(pos, 2) != "_:") return std::nullopt;
    std::size_t end = pos + 2;
    while (end < line.size() && !is_space(line[end]) && line[end] != '<' && line[end] != '"') ++end;
    // A label never ends with '.', which belongs to the statement terminator.
    while (end > pos + 2 && line[end - 1] == '.') --end;
    if (end == pos + 2) return std::nullopt;
    Term t = Term::blank(std::string(line.substr(pos + 2, end - pos - 2)));
    pos = end;
    return t;
  }
  if (c == '"') {
    std::size_t end = pos + 1;
    bool closed = false;
    while (end < line.size()) {
      if (line[end] == '\\') {
        end += 2;
        continue;
      }
      if (line[end] == '"') {
        closed = true;
        break;
      }
      ++end;
    }
    if (!closed) return std::nullopt;
    ++end;  // past closing quote
    if (end < line.size() && line[end] == '@') {
      std::size_t tag_end = end + 1;
      while (tag_end < line.size() && is_lang_char(line[tag_end])) ++tag_end;
      if (tag_end == end + 1) return std::nullopt;
      end = tag_end;
    } else if (line.substr(end, 2) == "^^") {
      std::size_t dt = end + 2;
      if (!read_iri(line, dt)) return std::nullopt;
      end = dt;
    }
    Term t = Term::literal(std::string(line.substr(pos, end - pos)));
    pos = end;
    return t;
  }
  return std::nullopt;
}

Graph parse_ntriples(std::istream& in) {
  GraphBuilder builder;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string_view line = raw;
    std::size_t pos = 0;
    skip_spaces(line, pos);
    if (pos == line.size() || line[pos] == '#') continue;

    auto fail = [&](const std::string& reason) -> ParseError { return ParseError(line_no, raw, reason); };

    auto subject = parse_term(line, pos);
    if (!subject) throw fail("malformed subject");
    skip_spaces(line, pos);
    auto predicate = parse_term(line, pos);
    if (!predicate) throw fail("malformed predicate");
    skip_spaces(line, pos);
    auto object = parse_term(line, pos);
    if (!object) throw fail("malformed object");
    skip_spaces(line, pos);
    if (pos >= line.size() || line[pos] != '.') throw fail("expected '.'");
    ++pos;
    skip_spaces(line, pos);
    if (pos < line.size() && line[pos] != '#') throw fail("trailing content after '.'");

    try {
      builder.add(*subject, *predicate, *object);
    } catch (const StructuralError& e) {
      throw fail(e.what());
    }
  }
  return std::move(builder).build();
}

Graph parse_ntriples(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_ntriples(in);
}

Graph load_ntriples_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open graph file: " + path);
  try {
    return parse_ntriples(in);
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

void write_ntriples(const Graph& graph, std::ostream& out) { out << graph.to_ntriples(); }

}  // namespace skipvec
