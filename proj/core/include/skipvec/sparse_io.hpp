#ifndef SKIPVEC_SPARSE_IO_HPP
#define SKIPVEC_SPARSE_IO_HPP

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "skipvec/labels.hpp"
#include "skipvec/vectorizer.hpp"

namespace skipvec {

// Sparse dataset text format, one resource per line:
//
//   <label-id> <coord>:<value> <coord>:<value> ...
//
// label ids are 1-based positions in the sorted class list, coordinates are
// 1-based and strictly ascending, values use up to 9 significant digits and
// zeros are omitted. LF line endings.

struct SparseRow {
  std::size_t label_id = 0;  // 1-based
  SparseEntries entries;     // 0-based coordinates
};

struct SparseDataset {
  std::vector<SparseRow> rows;
};

/// printf("%.9g").
std::string format_value(double value);

void write_sparse(std::ostream& out, const SparseDataset& dataset);

struct ImportOptions {
  /// Reject unsorted or repeated coordinates instead of re-sorting them.
  bool strict = true;
  /// When set, coordinates above this (1-based) bound are rejected.
  std::optional<std::size_t> dim;
};

/// Throws ParseError (1-based line number) on malformed lines and
/// out-of-range coordinates.
SparseDataset read_sparse(std::istream& in, const ImportOptions& options = {});

/// `label-id \t label` per class.
void write_label_map(std::ostream& out, const std::vector<std::string>& classes);

struct ExportSinks {
  std::ostream* dataset = nullptr;
  std::ostream* dictionary = nullptr;  // optional
  std::ostream* label_map = nullptr;   // optional
};

/// Converts vectors to rows using the resources' labels and writes the
/// dataset plus sidecars. Throws Error if a vector's resource is unlabeled.
SparseDataset to_sparse_dataset(std::span<const SkipVector> vectors, const LabeledResources& labels);
void export_sparse(std::span<const SkipVector> vectors, const LabeledResources& labels, const ConcatenatedIndex& index,
                   const TermDictionary& dict, const ExportSinks& sinks);

/// Debug output: one dense comma-separated row per resource, label first.
void write_dense(std::ostream& out, const SparseDataset& dataset, std::size_t dim);

}  // namespace skipvec

#endif  // SKIPVEC_SPARSE_IO_HPP
