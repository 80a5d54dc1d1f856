#ifndef SKIPVEC_ERROR_HPP
#define SKIPVEC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skipvec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed line in a line-oriented input. `line` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string text, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason + ": " + text),
        line_(line),
        text_(std::move(text)) {}

  std::size_t line() const { return line_; }
  const std::string& text() const { return text_; }

 private:
  std::size_t line_;
  std::string text_;
};

/// Term kinds violate the RDF triple constraints (literal subject, non-IRI predicate).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration refused because the input exceeds its safety limits.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace skipvec

#endif  // SKIPVEC_ERROR_HPP
