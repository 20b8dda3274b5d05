#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "arifs/baselines.hpp"
#include "arifs/error.hpp"
#include "arifs/synthetic.hpp"
#include "oracles.hpp"

namespace arifs {
namespace {

// Balanced binary design: feature 0 copies the label, feature 1 is
// independent of it, feature 2 is constant.
CategoricalDataset balanced_design() {
  std::vector<std::vector<Code>> rows;
  std::vector<Code> labels;
  for (Code y : {0u, 1u}) {
    for (Code x : {0u, 1u}) {
      for (int rep = 0; rep < 2; ++rep) {
        rows.push_back({y, x, 0});
        labels.push_back(y);
      }
    }
  }
  return oracle::make_dataset(rows, labels);
}

double entropy(const std::map<std::vector<Code>, double>& counts, double total) {
  double h = 0;
  for (const auto& [key, c] : counts) h -= c / total * std::log(c / total);
  return h;
}

TEST(Methods, ParseRoundTrip) {
  for (auto m : {MethodId::ari, MethodId::chi2, MethodId::mi, MethodId::relief}) {
    EXPECT_EQ(parse_method(to_string(m)), m);
  }
  EXPECT_FALSE(parse_method("gini").has_value());
}

TEST(Chi2, HandComputedTables) {
  const auto scores = chi2_scores(balanced_design());
  // [[4,0],[0,4]] with expected 2 in every cell: 4 * (2^2 / 2) = 8 = m.
  EXPECT_DOUBLE_EQ(scores[0], 8.0);
  EXPECT_DOUBLE_EQ(scores[1], 0.0);
  EXPECT_DOUBLE_EQ(scores[2], 0.0);
}

TEST(Chi2, FourRowIndependentDesign) {
  const auto ds = oracle::make_dataset({{0}, {0}, {1}, {1}}, {0, 1, 0, 1});
  EXPECT_DOUBLE_EQ(chi2_scores(ds)[0], 0.0);
}

// Second algebraic route: chi2 = N * (sum n_vc^2 / (n_v n_c) - 1).
TEST(Chi2, MatchesAlternativeFormula) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const auto ds = oracle::random_dataset(rng, 20 + rng() % 100, 3, 2 + rng() % 3, 2 + rng() % 3);
    const auto scores = chi2_scores(ds);
    for (std::size_t i = 0; i < ds.features(); ++i) {
      std::map<std::pair<Code, Code>, double> joint;
      std::map<Code, double> nv, nc;
      for (std::size_t r = 0; r < ds.rows(); ++r) {
        joint[{ds.at(r, FeatureId{i}), ds.label(r)}] += 1;
        nv[ds.at(r, FeatureId{i})] += 1;
        nc[ds.label(r)] += 1;
      }
      double s = 0;
      for (const auto& [key, c] : joint) s += c * c / (nv[key.first] * nc[key.second]);
      const double expected = static_cast<double>(ds.rows()) * (s - 1.0);
      EXPECT_NEAR(scores[i], expected, 1e-9 * std::max(1.0, expected));
      EXPECT_GE(scores[i], 0.0);
    }
  }
}

TEST(MutualInformation, ClosedForms) {
  const auto scores = mi_scores(balanced_design());
  EXPECT_NEAR(scores[0], std::log(2.0), 1e-12);
  EXPECT_NEAR(scores[1], 0.0, 1e-12);
  EXPECT_EQ(scores[2], 0.0);
}

// I(X;Y) = H(X) + H(Y) - H(X,Y), which is symmetric in X and Y by construction.
TEST(MutualInformation, MatchesEntropyIdentity) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto ds = oracle::random_dataset(rng, 10 + rng() % 150, 3, 2 + rng() % 4, 2 + rng() % 3);
    const auto scores = mi_scores(ds);
    const double total = static_cast<double>(ds.rows());
    for (std::size_t i = 0; i < ds.features(); ++i) {
      std::map<std::vector<Code>, double> hx, hy, hxy;
      for (std::size_t r = 0; r < ds.rows(); ++r) {
        const Code x = ds.at(r, FeatureId{i}), y = ds.label(r);
        hx[{x}] += 1;
        hy[{y}] += 1;
        hxy[{x, y}] += 1;
      }
      const double expected = entropy(hx, total) + entropy(hy, total) - entropy(hxy, total);
      EXPECT_NEAR(scores[i], std::max(expected, 0.0), 1e-12);
    }
  }
}

TEST(Relief, LabelCopyIsTopAndConstantIsZero) {
  const auto weights = relief_scores(balanced_design(), 2);
  EXPECT_GT(weights[0], 0.0);
  EXPECT_GT(weights[0], weights[1]);
  EXPECT_GT(weights[0], weights[2]);
  EXPECT_EQ(weights[2], 0.0);
}

TEST(Relief, WeightsStayInUnitInterval) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto ds = oracle::random_dataset(rng, 5 + rng() % 60, 4, 2 + rng() % 3, 2 + rng() % 3);
    for (const auto k : {std::size_t{1}, std::size_t{3}, std::size_t{10}}) {
      for (double w : relief_scores(ds, k)) {
        EXPECT_GE(w, -1.0 - 1e-12);
        EXPECT_LE(w, 1.0 + 1e-12);
      }
    }
  }
}

TEST(Relief, TooLargeKIsClampedNotFatal) {
  const auto result = relief(balanced_design(), ReliefOptions{50});
  EXPECT_EQ(result.clamped_anchors, 8U);
  EXPECT_GT(result.weights[0], 0.0);
  EXPECT_EQ(relief(balanced_design(), ReliefOptions{2}).clamped_anchors, 0U);
}

TEST(Relief, Preconditions) {
  EXPECT_THROW(relief_scores(oracle::make_dataset({{0}}, {0}), 1), Error);
  EXPECT_THROW(relief_scores(balanced_design(), 0), Error);
}

TEST(Relief, SeparatesXorFeatures) {
  const auto ds = subsample(generate(SyntheticSpec{SyntheticFunction::g2}), 341, 4);
  const auto w = relief_scores(ds, 10);
  for (std::size_t i = 2; i < 10; ++i) {
    EXPECT_GT(w[0], w[i]);
    EXPECT_GT(w[1], w[i]);
  }
}

TEST(Baselines, ZeroVarianceScoresZeroEverywhere) {
  std::mt19937_64 rng(4);
  auto base = oracle::random_dataset(rng, 40, 2, 3, 2);
  std::vector<std::vector<Code>> rows;
  for (std::size_t r = 0; r < base.rows(); ++r) rows.push_back({base.row(r)[0], 1, base.row(r)[1]});
  const auto ds = oracle::make_dataset(rows, {base.labels().begin(), base.labels().end()}, 3, 2);
  EXPECT_EQ(chi2_scores(ds)[1], 0.0);
  EXPECT_EQ(mi_scores(ds)[1], 0.0);
  EXPECT_EQ(relief_scores(ds, 5)[1], 0.0);
}

}  // namespace
}  // namespace arifs
