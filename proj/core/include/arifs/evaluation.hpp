#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "arifs/dataset.hpp"
#include "arifs/protocol.hpp"

namespace arifs {

struct LogisticConfig {
  double l2_strength = 1e-3;
  std::size_t max_iterations = 500;
  double learning_rate = 0.1;
};

struct EvalConfig {
  std::size_t k = 4;
  std::size_t folds = 10;
  LogisticConfig classifier;
  std::uint64_t seed = 0;
  bool stratified = true;
};

/// Highest-scoring features of a report, at most k of them. Redundant
/// features never qualify; ties go to the lower index; features whose score
/// is exactly 0 are dropped after truncation, so fewer than k may come back.
/// Ranks by the normalised score when present, otherwise by raw_mean.
/// Throws EmptySelection when nothing survives.
std::vector<FeatureId> top_k_features(const ScoreReport& report, std::size_t k);

/// One-hot design matrix over the selected features, one block of
/// |domain(f)| columns per feature.
Eigen::MatrixXd one_hot(const CategoricalDataset& ds, std::span<const FeatureId> features,
                        std::span<const std::size_t> rows);

/// Multinomial logistic regression trained by full-batch gradient descent on
/// the mean cross-entropy plus (l2/2)*||W||^2. The bias row is not penalised.
class SoftmaxRegression {
 public:
  SoftmaxRegression(std::size_t inputs, std::size_t classes);

  // (inputs + 1) x classes; the last row holds the biases.
  const Eigen::MatrixXd& parameters() const noexcept { return params_; }
  void set_parameters(const Eigen::MatrixXd& params);

  double loss(const Eigen::MatrixXd& x, std::span<const Code> y, double l2) const;
  Eigen::MatrixXd gradient(const Eigen::MatrixXd& x, std::span<const Code> y, double l2) const;

  // Returns the loss before every step plus the final loss.
  std::vector<double> fit(const Eigen::MatrixXd& x, std::span<const Code> y,
                          const LogisticConfig& config);

  std::vector<Code> predict(const Eigen::MatrixXd& x) const;

 private:
  Eigen::MatrixXd probabilities(const Eigen::MatrixXd& x) const;

  Eigen::MatrixXd params_;
};

struct CvResult {
  double accuracy = 0.0;
  std::vector<double> fold_accuracies;
  bool stratified = true;
  std::vector<std::string> warnings;
};

/// Row indices of each fold. Stratified folds deal every class's shuffled
/// members round-robin; if some present class has fewer members than folds,
/// plain shuffled folds are used and a ClassTooSmall warning is recorded.
std::vector<std::vector<std::size_t>> make_folds(const CategoricalDataset& ds, std::size_t folds,
                                                 std::uint64_t seed, bool stratified,
                                                 std::vector<std::string>* warnings = nullptr);

CvResult cross_validate(const CategoricalDataset& ds, std::span<const FeatureId> features,
                        const EvalConfig& cfg);

double cv_accuracy(const CategoricalDataset& ds, std::span<const FeatureId> features,
                   const EvalConfig& cfg);

}  // namespace arifs
