#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "arifs/error.hpp"
#include "arifs/protocol.hpp"
#include "oracles.hpp"

namespace arifs {
namespace {

CategoricalDataset cube(SyntheticFunction f, std::size_t n = 10) {
  return generate(SyntheticSpec{f, n, 2, FullEnumeration{}});
}

ProtocolConfig third(std::uint64_t seed = 1) {
  ProtocolConfig cfg;
  cfg.repetitions = 10;
  cfg.sample = SampleFraction{1.0 / 3.0};
  cfg.seed = seed;
  return cfg;
}

TEST(SampleSize, Resolution) {
  EXPECT_EQ(resolve_sample_size(SampleFraction{1.0 / 3.0}, 1024), 341U);
  EXPECT_EQ(resolve_sample_size(SampleFraction{0.333}, 1024), 341U);
  EXPECT_EQ(resolve_sample_size(SampleFraction{1.0}, 17), 17U);
  EXPECT_EQ(resolve_sample_size(SampleCount{5}, 17), 5U);
  EXPECT_THROW(resolve_sample_size(SampleCount{18}, 17), Error);
  EXPECT_THROW(resolve_sample_size(SampleFraction{0.0}, 17), Error);
  EXPECT_THROW(resolve_sample_size(SampleFraction{1.5}, 17), Error);
  EXPECT_THROW(resolve_sample_size(SampleFraction{0.01}, 17), Error);
}

TEST(Protocol, DegenerateSinglePassIsRawScores) {
  const auto ds = cube(SyntheticFunction::g1);
  ProtocolConfig cfg;
  cfg.repetitions = 1;
  cfg.sample = SampleFraction{1.0};
  cfg.normalize = false;
  const auto report = run_protocol(ds, MethodId::ari, cfg);
  const auto direct = ari_all(ds);
  ASSERT_EQ(report.features.size(), direct.size());
  for (std::size_t i = 0; i < direct.size(); ++i) {
    EXPECT_DOUBLE_EQ(report.features[i].raw_mean, direct[i].value());
    EXPECT_FALSE(report.features[i].normalized.has_value());
  }
}

TEST(Protocol, XorThirdSamplesNormaliseToHalves) {
  const auto report = run_protocol(cube(SyntheticFunction::g2), MethodId::ari, third());
  EXPECT_DOUBLE_EQ(*report.features[0].normalized, 0.5);
  EXPECT_DOUBLE_EQ(*report.features[1].normalized, 0.5);
  for (std::size_t i = 2; i < 10; ++i) EXPECT_EQ(*report.features[i].normalized, 0.0);
  EXPECT_EQ(report.sample_size, 341U);
  ASSERT_EQ(report.repetitions.size(), 10U);
  for (std::size_t t = 0; t < 10; ++t) EXPECT_EQ(report.repetitions[t].seed, 1 + t + 1);
}

TEST(Protocol, G1ThirdSamples) {
  const auto report = run_protocol(cube(SyntheticFunction::g1), MethodId::ari, third());
  EXPECT_NEAR(*report.features[0].normalized, 0.61, 0.05);
  EXPECT_NEAR(*report.features[1].normalized, 0.19, 0.05);
  EXPECT_NEAR(*report.features[2].normalized, 0.19, 0.05);
}

TEST(Protocol, NormalisedScoresSumToOne) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const auto ds = oracle::random_dataset(rng, 60 + rng() % 60, 4, 2 + rng() % 2, 2);
    for (auto method : {MethodId::ari, MethodId::chi2, MethodId::mi, MethodId::relief}) {
      ProtocolConfig cfg = third(trial);
      cfg.sample = SampleFraction{0.8};
      cfg.repetitions = 3;
      ScoreReport report;
      try {
        report = run_protocol(ds, method, cfg);
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::NoScorableFeature);
        continue;
      }
      double sum = 0;
      bool any_positive = false;
      for (const auto& f : report.features) {
        if (f.redundant) {
          EXPECT_FALSE(f.normalized.has_value());
          continue;
        }
        ASSERT_TRUE(f.normalized.has_value());
        EXPECT_GE(*f.normalized, 0.0);
        EXPECT_LE(*f.normalized, 1.0);
        if (!f.flagged()) {
          sum += *f.normalized;
          any_positive |= f.raw_mean > 0;
        }
      }
      if (any_positive) EXPECT_NEAR(sum, 1.0, 1e-9);
    }
  }
}

TEST(Protocol, RedundantFeaturesAreFlaggedAndExcluded) {
  const auto ds = duplicate_feature(cube(SyntheticFunction::g1, 6), FeatureId{0});
  ProtocolConfig cfg = third();
  cfg.sample = SampleFraction{1.0};
  cfg.repetitions = 2;
  const auto report = run_protocol(ds, MethodId::ari, cfg);
  EXPECT_TRUE(report.features[0].redundant);
  EXPECT_TRUE(report.features[6].redundant);
  EXPECT_FALSE(report.features[0].normalized.has_value());
  EXPECT_EQ(report.features[0].raw_mean, 2.0);
  EXPECT_EQ(report.features[0].redundant_repetitions, 2U);
  // x1 is out of the picture; x2 and x3 share the mass.
  EXPECT_DOUBLE_EQ(*report.features[1].normalized + *report.features[2].normalized, 1.0);
  EXPECT_NEAR(report.redundant_fraction(), 2.0 / 7.0, 1e-12);
}

TEST(Protocol, AllFlaggedIsNoScorableFeature) {
  const auto ds = oracle::make_dataset({{0, 1}, {0, 1}, {0, 1}}, {0, 1, 0});
  ProtocolConfig cfg = third();
  cfg.sample = SampleFraction{1.0};
  try {
    run_protocol(ds, MethodId::ari, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoScorableFeature);
  }
  // Other methods have no sentinels: constant columns simply score 0.
  EXPECT_NO_THROW(run_protocol(ds, MethodId::chi2, cfg));
}

TEST(Protocol, NegativeReliefMeansNormaliseToZero) {
  const auto report = run_protocol(cube(SyntheticFunction::g1), MethodId::relief, third());
  for (const auto& f : report.features) {
    if (f.raw_mean < 0) EXPECT_EQ(*f.normalized, 0.0);
  }
}

TEST(Protocol, Deterministic) {
  const auto ds = cube(SyntheticFunction::g6);
  for (auto method : {MethodId::ari, MethodId::chi2, MethodId::mi, MethodId::relief}) {
    const auto a = run_protocol(ds, method, third(42));
    const auto b = run_protocol(ds, method, third(42));
    for (std::size_t i = 0; i < a.features.size(); ++i) {
      EXPECT_EQ(a.features[i].raw_mean, b.features[i].raw_mean);
      EXPECT_EQ(a.features[i].normalized, b.features[i].normalized);
    }
  }
}

TEST(Sweep, CoverageAndUniverse) {
  ProtocolConfig cfg;
  cfg.repetitions = 2;
  const std::vector<std::size_t> sizes{500};
  const auto points =
      dimensionality_sweep(SyntheticSpec{SyntheticFunction::g1, 10, 2}, sizes, cfg);
  ASSERT_EQ(points.size(), 1U);
  EXPECT_EQ(points[0].universe, 1024U);
  EXPECT_DOUBLE_EQ(points[0].coverage_percent, 48.828125);
  EXPECT_FALSE(points[0].full_universe);

  const std::vector<std::size_t> two{2};
  const auto tiny = dimensionality_sweep(SyntheticSpec{SyntheticFunction::g4, 1, 2}, two, cfg);
  EXPECT_EQ(tiny[0].universe, 2U);
  EXPECT_DOUBLE_EQ(tiny[0].coverage_percent, 100.0);
  EXPECT_TRUE(tiny[0].full_universe);

  const auto big = dimensionality_sweep(SyntheticSpec{SyntheticFunction::g1, 15, 3}, sizes, cfg);
  EXPECT_EQ(big[0].universe, 14348907U);
}

TEST(Sweep, FullBinaryUniverseHasNoRedundancy) {
  ProtocolConfig cfg;
  cfg.repetitions = 1;
  const std::vector<std::size_t> sizes{1024};
  for (int k = 1; k <= 8; ++k) {
    const auto points = dimensionality_sweep(
        SyntheticSpec{static_cast<SyntheticFunction>(k), 10, 2}, sizes, cfg);
    ASSERT_TRUE(points[0].full_universe);
    for (const auto& f : points[0].report.features) EXPECT_FALSE(f.redundant);
  }
}

TEST(Sweep, SmallSamplesOfAHugeUniverseAreMostlyRedundant) {
  ProtocolConfig cfg;
  cfg.repetitions = 3;
  const std::vector<std::size_t> sizes{400};
  const auto points = dimensionality_sweep(SyntheticSpec{SyntheticFunction::g1, 15, 3}, sizes, cfg);
  EXPECT_GE(points[0].report.redundant_fraction(), 0.9);
  EXPECT_THROW(dimensionality_sweep(SyntheticSpec{SyntheticFunction::g1, 15, 3}, {}, cfg), Error);
}

// Once Dif(i) is nonempty on a nested sample it stays nonempty as the sample grows.
TEST(Sweep, RedundancyNeverReappearsAsNestedSamplesGrow) {
  const auto universe = generate(SyntheticSpec{SyntheticFunction::g1, 6, 3, FullEnumeration{}});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto order = sample_indices(universe.rows(), universe.rows(), seed);
    std::vector<bool> seen_pairs(universe.features(), false);
    for (std::size_t size = 20; size <= universe.rows(); size += 40) {
      std::vector<std::size_t> ids(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(size));
      const auto s = universe.select_rows(ids);
      const auto scores = ari_all(s);
      for (std::size_t i = 0; i < scores.size(); ++i) {
        if (seen_pairs[i]) EXPECT_NE(scores[i].kind(), ScoreKind::redundant);
        if (scores[i].is_ratio()) seen_pairs[i] = true;
      }
    }
  }
}

}  // namespace
}  // namespace arifs
