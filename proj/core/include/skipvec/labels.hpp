#ifndef SKIPVEC_LABELS_HPP
#define SKIPVEC_LABELS_HPP

#include <cstddef>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "skipvec/graph.hpp"
#include "skipvec/term.hpp"

namespace skipvec {

struct LabeledResource {
  Term resource;
  std::size_t class_index;  // index into LabeledResources::classes()
};

/// Target resources with one class label each. Entries keep file order;
/// classes are sorted lexicographically.
class LabeledResources {
 public:
  LabeledResources() = default;
  /// Throws Error on a resource carrying two different labels.
  static LabeledResources from_pairs(const std::vector<std::pair<Term, std::string>>& pairs);

  const std::vector<LabeledResource>& entries() const { return entries_; }
  const std::vector<std::string>& classes() const { return classes_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  std::optional<std::size_t> class_of(const Term& resource) const;
  const std::string& label_of(std::size_t entry) const { return classes_[entries_[entry].class_index]; }
  std::vector<std::size_t> class_sizes() const;

  /// Subset holding the given entry positions; the class list is kept whole
  /// so class indices stay comparable across subsets.
  LabeledResources subset(const std::vector<std::size_t>& positions) const;
  /// Same resources, labels replaced by `class_indices` (one per entry).
  LabeledResources relabeled(const std::vector<std::size_t>& class_indices) const;

 private:
  std::vector<LabeledResource> entries_;
  std::vector<std::string> classes_;
  std::unordered_map<Term, std::size_t, TermHash> position_;
};

/// Parses `<resource>\t<label>` lines. Blank lines and '#' comments are
/// skipped; repeated identical lines collapse; conflicting labels and
/// malformed lines throw ParseError with the 1-based line number.
LabeledResources load_labels(std::istream& in);
LabeledResources load_labels(std::string_view text);
LabeledResources load_labels_file(const std::string& path);

/// Drops every triple (s, p, o) with s a labeled target and p in `predicates`.
Graph remove_label_leak_triples(const Graph& graph, const LabeledResources& targets,
                                const std::vector<Term>& predicates);

}  // namespace skipvec

#endif  // SKIPVEC_LABELS_HPP
