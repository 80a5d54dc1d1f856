#include "skipvec/sparse_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "skipvec/error.hpp"

namespace skipvec {

std::string format_value(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

void write_sparse(std::ostream& out, const SparseDataset& dataset) {
  for (const auto& row : dataset.rows) {
    out << row.label_id;
    for (const auto& [coord, value] : row.entries) {
      if (value == 0.0) continue;
      out << ' ' << (coord + 1) << ':' << format_value(value);
    }
    out << '\n';
  }
}

SparseDataset read_sparse(std::istream& in, const ImportOptions& options) {
  SparseDataset dataset;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty()) throw ParseError(line_no, raw, "empty line");

    SparseRow row;
    std::string_view line = raw;
    auto next_token = [&]() -> std::string_view {
      const auto space = line.find(' ');
      std::string_view tok = line.substr(0, space);
      line = space == std::string_view::npos ? std::string_view{} : line.substr(space + 1);
      return tok;
    };

    const std::string_view label = next_token();
    auto [lp, lec] = std::from_chars(label.data(), label.data() + label.size(), row.label_id);
    if (lec != std::errc{} || lp != label.data() + label.size() || row.label_id == 0) {
      throw ParseError(line_no, raw, "malformed label id");
    }

    while (!line.empty()) {
      const std::string_view tok = next_token();
      const auto colon = tok.find(':');
      if (tok.empty() || colon == std::string_view::npos) throw ParseError(line_no, raw, "malformed entry");
      std::size_t coord = 0;
      auto [cp, cec] = std::from_chars(tok.data(), tok.data() + colon, coord);
      if (cec != std::errc{} || cp != tok.data() + colon) throw ParseError(line_no, raw, "malformed coordinate");
      if (coord == 0 || (options.dim && coord > *options.dim)) {
        throw ParseError(line_no, raw, "coordinate out of range: " + std::to_string(coord));
      }
      const std::string value_text(tok.substr(colon + 1));
      char* end = nullptr;
      const double value = std::strtod(value_text.c_str(), &end);
      if (value_text.empty() || end != value_text.c_str() + value_text.size() || !std::isfinite(value)) {
        throw ParseError(line_no, raw, "malformed value");
      }
      const auto c0 = static_cast<Coordinate>(coord - 1);
      if (options.strict && !row.entries.empty() && row.entries.back().first >= c0) {
        throw ParseError(line_no, raw, "coordinates not strictly ascending");
      }
      row.entries.emplace_back(c0, value);
    }
    if (!options.strict) {
      std::stable_sort(row.entries.begin(), row.entries.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      for (std::size_t i = 1; i < row.entries.size(); ++i) {
        if (row.entries[i].first == row.entries[i - 1].first) {
          throw ParseError(line_no, raw, "repeated coordinate");
        }
      }
    }
    dataset.rows.push_back(std::move(row));
  }
  return dataset;
}

void write_label_map(std::ostream& out, const std::vector<std::string>& classes) {
  for (std::size_t i = 0; i < classes.size(); ++i) out << (i + 1) << '\t' << classes[i] << '\n';
}

SparseDataset to_sparse_dataset(std::span<const SkipVector> vectors, const LabeledResources& labels) {
  SparseDataset dataset;
  dataset.rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    auto cls = labels.class_of(v.resource);
    if (!cls) throw Error("export_sparse: resource " + to_ntriples(v.resource) + " has no label");
    dataset.rows.push_back({*cls + 1, v.entries});
  }
  return dataset;
}

void export_sparse(std::span<const SkipVector> vectors, const LabeledResources& labels, const ConcatenatedIndex& index,
                   const TermDictionary& dict, const ExportSinks& sinks) {
  const auto dataset = to_sparse_dataset(vectors, labels);
  if (sinks.dataset) write_sparse(*sinks.dataset, dataset);
  if (sinks.dictionary) write_dictionary(*sinks.dictionary, index, dict);
  if (sinks.label_map) write_label_map(*sinks.label_map, labels.classes());
}

void write_dense(std::ostream& out, const SparseDataset& dataset, std::size_t dim) {
  for (const auto& row : dataset.rows) {
    std::vector<double> dense(dim, 0.0);
    for (const auto& [c, v] : row.entries) dense.at(c) = v;
    out << row.label_id;
    for (double v : dense) out << ',' << format_value(v);
    out << '\n';
  }
}

}  // namespace skipvec
