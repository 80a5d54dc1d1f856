#include "skipvec/feature.hpp"

namespace skipvec {

std::string canonical_string(const Feature& feature, const TermDictionary& dict) {
  std::string out(pattern_tag(feature.pattern));
  for (std::size_t i = 0; i < feature.arity(); ++i) {
    out += '|';
    out += to_ntriples(dict.term(feature.slots[i]));
  }
  return out;
}

}  // namespace skipvec
