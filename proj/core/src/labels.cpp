#include "skipvec/labels.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include "skipvec/error.hpp"
#include "skipvec/ntriples.hpp"

namespace skipvec {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

LabeledResources LabeledResources::from_pairs(const std::vector<std::pair<Term, std::string>>& pairs) {
  std::vector<std::pair<Term, std::string>> unique;
  std::unordered_map<Term, std::string, TermHash> seen;
  for (const auto& [term, label] : pairs) {
    auto [it, inserted] = seen.emplace(term, label);
    if (!inserted) {
      if (it->second != label) {
        throw Error("conflicting labels for " + to_ntriples(term) + ": '" + it->second + "' and '" +
                    label + "'");
      }
      continue;
    }
    unique.emplace_back(term, label);
  }

  LabeledResources out;
  std::set<std::string> classes;
  for (const auto& [term, label] : unique) classes.insert(label);
  out.classes_.assign(classes.begin(), classes.end());
  for (const auto& [term, label] : unique) {
    const auto idx = static_cast<std::size_t>(
        std::lower_bound(out.classes_.begin(), out.classes_.end(), label) - out.classes_.begin());
    out.position_.emplace(term, out.entries_.size());
    out.entries_.push_back({term, idx});
  }
  return out;
}

std::optional<std::size_t> LabeledResources::class_of(const Term& resource) const {
  auto it = position_.find(resource);
  if (it == position_.end()) return std::nullopt;
  return entries_[it->second].class_index;
}

std::vector<std::size_t> LabeledResources::class_sizes() const {
  std::vector<std::size_t> sizes(classes_.size(), 0);
  for (const auto& e : entries_) ++sizes[e.class_index];
  return sizes;
}

LabeledResources LabeledResources::subset(const std::vector<std::size_t>& positions) const {
  LabeledResources out;
  out.classes_ = classes_;
  for (std::size_t p : positions) {
    out.position_.emplace(entries_.at(p).resource, out.entries_.size());
    out.entries_.push_back(entries_.at(p));
  }
  return out;
}

LabeledResources LabeledResources::relabeled(const std::vector<std::size_t>& class_indices) const {
  if (class_indices.size() != entries_.size()) throw Error("relabeled: size mismatch");
  LabeledResources out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (class_indices[i] >= classes_.size()) throw Error("relabeled: class index out of range");
    out.entries_[i].class_index = class_indices[i];
  }
  return out;
}

LabeledResources load_labels(std::istream& in) {
  std::vector<std::pair<Term, std::string>> pairs;
  std::map<Term, std::pair<std::string, std::size_t>> first_seen;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw ParseError(line_no, raw, "expected <resource>\\t<label>");
    std::string_view resource_text = trim(line.substr(0, tab));
    std::string_view label = trim(line.substr(tab + 1));
    std::size_t pos = 0;
    auto resource = parse_term(resource_text, pos);
    if (!resource || pos != resource_text.size() || resource->is_literal()) {
      throw ParseError(line_no, raw, "resource must be an IRI or blank node");
    }
    if (label.empty() || label.find('\t') != std::string_view::npos) {
      throw ParseError(line_no, raw, "malformed label");
    }
    auto [it, inserted] = first_seen.emplace(*resource, std::make_pair(std::string(label), line_no));
    if (!inserted && it->second.first != label) {
      throw ParseError(line_no, raw,
                       "conflicting label (line " + std::to_string(it->second.second) + " says '" +
                           it->second.first + "')");
    }
    pairs.emplace_back(std::move(*resource), std::string(label));
  }
  return LabeledResources::from_pairs(pairs);
}

LabeledResources load_labels(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_labels(in);
}

LabeledResources load_labels_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open label file: " + path);
  try {
    return load_labels(in);
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

Graph remove_label_leak_triples(const Graph& graph, const LabeledResources& targets,
                                const std::vector<Term>& predicates) {
  std::unordered_set<TermId> preds;
  for (const auto& p : predicates) {
    const TermId id = graph.find(p);
    if (id != kNoTerm) preds.insert(id);
  }
  std::unordered_set<TermId> subjects;
  for (const auto& e : targets.entries()) {
    const TermId id = graph.find(e.resource);
    if (id != kNoTerm) subjects.insert(id);
  }
  if (preds.empty() || subjects.empty()) return graph.filtered([](const TripleIds&) { return true; });
  return graph.filtered([&](const TripleIds& t) {
    return !(subjects.contains(t.subject) && preds.contains(t.predicate));
  });
}

}  // namespace skipvec
