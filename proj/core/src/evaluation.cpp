#include "arifs/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "arifs/error.hpp"
#include "random.hpp"

namespace arifs {

std::vector<FeatureId> top_k_features(const ScoreReport& report, std::size_t k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  struct Candidate {
    std::size_t index;
    double score;
  };
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < report.features.size(); ++i) {
    const auto& f = report.features[i];
    if (f.redundant) continue;
    candidates.push_back({i, f.normalized.value_or(f.raw_mean)});
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.score > b.score; });
  if (candidates.size() > k) candidates.resize(k);

  std::vector<FeatureId> selected;
  for (const auto& c : candidates) {
    if (c.score != 0.0) selected.push_back(FeatureId{c.index});
  }
  if (selected.empty()) {
    throw Error(ErrorCode::EmptySelection, "every candidate feature scored 0 or was redundant");
  }
  return selected;
}

Eigen::MatrixXd one_hot(const CategoricalDataset& ds, std::span<const FeatureId> features,
                        std::span<const std::size_t> rows) {
  std::vector<std::size_t> offsets;
  std::size_t width = 0;
  for (auto f : features) {
    ds.check_feature(f);
    offsets.push_back(width);
    width += ds.feature_domain(f).size();
  }
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()),
                                            static_cast<Eigen::Index>(width));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t j = 0; j < features.size(); ++j) {
      const auto col = offsets[j] + ds.at(rows[r], features[j]);
      x(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col)) = 1.0;
    }
  }
  return x;
}

SoftmaxRegression::SoftmaxRegression(std::size_t inputs, std::size_t classes)
    : params_(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(inputs + 1),
                                    static_cast<Eigen::Index>(classes))) {
  if (classes < 1) throw Error(ErrorCode::InvalidArgument, "need at least one class");
}

void SoftmaxRegression::set_parameters(const Eigen::MatrixXd& params) {
  if (params.rows() != params_.rows() || params.cols() != params_.cols()) {
    throw Error(ErrorCode::LengthMismatch, "parameter matrix has the wrong shape");
  }
  params_ = params;
}

Eigen::MatrixXd SoftmaxRegression::probabilities(const Eigen::MatrixXd& x) const {
  const auto inputs = params_.rows() - 1;
  if (x.cols() != inputs) throw Error(ErrorCode::LengthMismatch, "design matrix width mismatch");
  Eigen::MatrixXd logits = x * params_.topRows(inputs);
  logits.rowwise() += params_.row(inputs);
  // Shift by the row max before exponentiating.
  const Eigen::VectorXd max = logits.rowwise().maxCoeff();
  logits.colwise() -= max;
  Eigen::MatrixXd p = logits.array().exp().matrix();
  const Eigen::VectorXd norm = p.rowwise().sum();
  for (Eigen::Index r = 0; r < p.rows(); ++r) p.row(r) /= norm(r);
  return p;
}

double SoftmaxRegression::loss(const Eigen::MatrixXd& x, std::span<const Code> y,
                               double l2) const {
  const auto p = probabilities(x);
  double nll = 0;
  for (Eigen::Index r = 0; r < p.rows(); ++r) {
    nll -= std::log(std::max(p(r, static_cast<Eigen::Index>(y[static_cast<std::size_t>(r)])),
                             1e-300));
  }
  const auto inputs = params_.rows() - 1;
  return nll / static_cast<double>(p.rows()) +
         0.5 * l2 * params_.topRows(inputs).squaredNorm();
}

Eigen::MatrixXd SoftmaxRegression::gradient(const Eigen::MatrixXd& x, std::span<const Code> y,
                                            double l2) const {
  Eigen::MatrixXd delta = probabilities(x);
  for (Eigen::Index r = 0; r < delta.rows(); ++r) {
    delta(r, static_cast<Eigen::Index>(y[static_cast<std::size_t>(r)])) -= 1.0;
  }
  const double scale = 1.0 / static_cast<double>(x.rows());
  const auto inputs = params_.rows() - 1;
  Eigen::MatrixXd grad(params_.rows(), params_.cols());
  grad.topRows(inputs) = scale * (x.transpose() * delta) + l2 * params_.topRows(inputs);
  grad.row(inputs) = scale * delta.colwise().sum();
  return grad;
}

std::vector<double> SoftmaxRegression::fit(const Eigen::MatrixXd& x, std::span<const Code> y,
                                           const LogisticConfig& config) {
  if (static_cast<std::size_t>(x.rows()) != y.size()) {
    throw Error(ErrorCode::LengthMismatch, "one label per design row is required");
  }
  if (!(config.learning_rate > 0)) throw Error(ErrorCode::InvalidArgument, "learning_rate must be > 0");
  if (config.l2_strength < 0) throw Error(ErrorCode::InvalidArgument, "l2_strength must be >= 0");
  std::vector<double> history;
  history.reserve(config.max_iterations + 1);
  for (std::size_t it = 0; it < config.max_iterations; ++it) {
    history.push_back(loss(x, y, config.l2_strength));
    params_ -= config.learning_rate * gradient(x, y, config.l2_strength);
  }
  history.push_back(loss(x, y, config.l2_strength));
  return history;
}

std::vector<Code> SoftmaxRegression::predict(const Eigen::MatrixXd& x) const {
  const auto p = probabilities(x);
  std::vector<Code> out(static_cast<std::size_t>(p.rows()));
  for (Eigen::Index r = 0; r < p.rows(); ++r) {
    Eigen::Index best = 0;
    p.row(r).maxCoeff(&best);
    out[static_cast<std::size_t>(r)] = static_cast<Code>(best);
  }
  return out;
}

std::vector<std::vector<std::size_t>> make_folds(const CategoricalDataset& ds, std::size_t folds,
                                                 std::uint64_t seed, bool stratified,
                                                 std::vector<std::string>* warnings) {
  if (folds < 2 || folds > ds.rows()) {
    throw Error(ErrorCode::InvalidArgument, "folds must lie in [2, " + std::to_string(ds.rows()) +
                                                "], got " + std::to_string(folds));
  }
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::size_t>> out(folds);

  if (stratified) {
    const auto counts = label_counts(ds);
    const bool too_small = std::any_of(counts.begin(), counts.end(), [&](std::size_t c) {
      return c > 0 && c < folds;
    });
    if (too_small) {
      if (warnings) {
        warnings->push_back("ClassTooSmall: a label class has fewer members than " +
                            std::to_string(folds) + " folds; using non-stratified folds");
      }
      stratified = false;
    }
  }

  std::size_t next = 0;
  auto deal = [&](std::vector<std::size_t>& members) {
    detail::shuffle_prefix(std::span<std::size_t>(members), members.size(), rng);
    for (auto r : members) {
      out[next].push_back(r);
      next = (next + 1) % folds;
    }
  };
  if (stratified) {
    std::vector<std::vector<std::size_t>> by_class(ds.label_classes());
    for (std::size_t r = 0; r < ds.rows(); ++r) by_class[ds.label(r)].push_back(r);
    for (auto& members : by_class) deal(members);
  } else {
    std::vector<std::size_t> all(ds.rows());
    std::iota(all.begin(), all.end(), std::size_t{0});
    deal(all);
  }
  return out;
}

CvResult cross_validate(const CategoricalDataset& ds, std::span<const FeatureId> features,
                        const EvalConfig& cfg) {
  if (features.empty()) {
    throw Error(ErrorCode::EmptySelection, "cross-validation needs at least one feature");
  }
  CvResult result;
  const auto folds = make_folds(ds, cfg.folds, cfg.seed, cfg.stratified, &result.warnings);
  result.stratified = cfg.stratified && result.warnings.empty();

  std::size_t width = 0;
  for (auto f : features) {
    ds.check_feature(f);
    width += ds.feature_domain(f).size();
  }

  double total = 0;
  for (std::size_t k = 0; k < folds.size(); ++k) {
    std::vector<std::size_t> train;
    for (std::size_t j = 0; j < folds.size(); ++j) {
      if (j != k) train.insert(train.end(), folds[j].begin(), folds[j].end());
    }
    const auto& test = folds[k];
    std::vector<Code> y_train, y_test;
    for (auto r : train) y_train.push_back(ds.label(r));
    for (auto r : test) y_test.push_back(ds.label(r));

    SoftmaxRegression model(width, ds.label_classes());
    model.fit(one_hot(ds, features, train), y_train, cfg.classifier);
    const auto predicted = model.predict(one_hot(ds, features, test));
    std::size_t correct = 0;
    for (std::size_t i = 0; i < predicted.size(); ++i) correct += predicted[i] == y_test[i];
    const double acc = static_cast<double>(correct) / static_cast<double>(test.size());
    result.fold_accuracies.push_back(acc);
    total += acc;
  }
  result.accuracy = total / static_cast<double>(folds.size());
  return result;
}

double cv_accuracy(const CategoricalDataset& ds, std::span<const FeatureId> features,
                   const EvalConfig& cfg) {
  return cross_validate(ds, features, cfg).accuracy;
}

}  // namespace arifs
