#ifndef SKIPVEC_EVALUATION_HPP
#define SKIPVEC_EVALUATION_HPP

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace skipvec {

/// Stratified fold assignment: members of each class are shuffled and dealt
/// round-robin, continuing across classes, so fold sizes differ by at most
/// one. Throws Error naming the class when a class has fewer members than
/// folds (leave-one-out, folds == |items|, is exempt), or when folds < 2 or
/// folds > |items|.
std::vector<std::size_t> stratified_folds(std::span<const std::size_t> class_of,
                                          const std::vector<std::string>& class_names, std::size_t folds,
                                          std::uint64_t seed);

struct TrainTestSplit {
  std::vector<std::size_t> train;  // ascending positions
  std::vector<std::size_t> test;
};

/// Stratified split; each class contributes round(fraction * size) members
/// to train. Throws Error if fraction is outside (0, 1) or a class would end
/// up absent from either side.
TrainTestSplit train_test_split(std::span<const std::size_t> class_of, const std::vector<std::string>& class_names,
                                double train_fraction, std::uint64_t seed);

struct CvResult {
  std::vector<double> fold_accuracies;
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
};

CvResult summarize(std::vector<double> accuracies);

/// `fold \t accuracy` lines, then `mean` and `stddev`; 9 decimal places.
void write_evaluation_report(std::ostream& out, const CvResult& result);

}  // namespace skipvec

#endif  // SKIPVEC_EVALUATION_HPP
