#include "skipvec/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include "skipvec/error.hpp"

namespace skipvec {

namespace {

std::vector<std::vector<std::size_t>> members_by_class(std::span<const std::size_t> class_of, std::size_t classes) {
  std::vector<std::vector<std::size_t>> members(classes);
  for (std::size_t i = 0; i < class_of.size(); ++i) {
    if (class_of[i] >= classes) throw Error("class index out of range");
    members[class_of[i]].push_back(i);
  }
  return members;
}

std::size_t class_count(std::span<const std::size_t> class_of, const std::vector<std::string>& names) {
  std::size_t classes = names.size();
  for (std::size_t c : class_of) classes = std::max(classes, c + 1);
  return classes;
}

std::string class_name(const std::vector<std::string>& names, std::size_t c) {
  return c < names.size() ? names[c] : "#" + std::to_string(c);
}

}  // namespace

std::vector<std::size_t> stratified_folds(std::span<const std::size_t> class_of,
                                          const std::vector<std::string>& class_names, std::size_t folds,
                                          std::uint64_t seed) {
  if (folds < 2) throw Error("cross-validation needs at least 2 folds");
  if (folds > class_of.size()) {
    throw Error("cannot split " + std::to_string(class_of.size()) + " resources into " + std::to_string(folds) +
                " folds; use fewer folds");
  }
  auto members = members_by_class(class_of, class_count(class_of, class_names));
  const bool leave_one_out = folds == class_of.size();
  if (!leave_one_out) {
    for (std::size_t c = 0; c < members.size(); ++c) {
      if (!members[c].empty() && members[c].size() < folds) {
        throw Error("class '" + class_name(class_names, c) + "' has " + std::to_string(members[c].size()) +
                    " members, fewer than " + std::to_string(folds) + " folds; use at most " +
                    std::to_string(members[c].size()) + " folds");
      }
    }
  }

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> fold_of(class_of.size(), 0);
  std::size_t next = 0;
  for (auto& m : members) {
    std::shuffle(m.begin(), m.end(), rng);
    for (std::size_t i : m) fold_of[i] = next++ % folds;
  }
  return fold_of;
}

TrainTestSplit train_test_split(std::span<const std::size_t> class_of, const std::vector<std::string>& class_names,
                                double train_fraction, std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) throw Error("train fraction must lie in (0, 1)");
  auto members = members_by_class(class_of, class_count(class_of, class_names));
  std::mt19937_64 rng(seed);
  TrainTestSplit split;
  for (std::size_t c = 0; c < members.size(); ++c) {
    auto& m = members[c];
    if (m.empty()) continue;
    const auto n_train = static_cast<std::size_t>(std::lround(train_fraction * static_cast<double>(m.size())));
    if (n_train == 0 || n_train == m.size()) {
      throw Error("class '" + class_name(class_names, c) + "' with " + std::to_string(m.size()) +
                  " members cannot be split " + std::to_string(train_fraction) + " / " +
                  std::to_string(1.0 - train_fraction));
    }
    std::shuffle(m.begin(), m.end(), rng);
    split.train.insert(split.train.end(), m.begin(), m.begin() + static_cast<std::ptrdiff_t>(n_train));
    split.test.insert(split.test.end(), m.begin() + static_cast<std::ptrdiff_t>(n_train), m.end());
  }
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

CvResult summarize(std::vector<double> accuracies) {
  CvResult r;
  r.fold_accuracies = std::move(accuracies);
  if (r.fold_accuracies.empty()) return r;
  const double n = static_cast<double>(r.fold_accuracies.size());
  r.mean = std::accumulate(r.fold_accuracies.begin(), r.fold_accuracies.end(), 0.0) / n;
  double var = 0.0;
  for (double a : r.fold_accuracies) var += (a - r.mean) * (a - r.mean);
  r.stddev = std::sqrt(var / n);
  return r;
}

void write_evaluation_report(std::ostream& out, const CvResult& result) {
  char buf[64];
  out << "fold\taccuracy\n";
  for (std::size_t i = 0; i < result.fold_accuracies.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.9f", result.fold_accuracies[i]);
    out << (i + 1) << '\t' << buf << '\n';
  }
  std::snprintf(buf, sizeof buf, "%.9f", result.mean);
  out << "mean\t" << buf << '\n';
  std::snprintf(buf, sizeof buf, "%.9f", result.stddev);
  out << "stddev\t" << buf << '\n';
}

}  // namespace skipvec
