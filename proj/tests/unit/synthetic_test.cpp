#include <gtest/gtest.h>

#include <set>

#include "arifs/error.hpp"
#include "arifs/synthetic.hpp"
#include "oracles.hpp"

namespace arifs {
namespace {

SyntheticSpec full(SyntheticFunction f, std::size_t dim = 10, std::size_t range = 2) {
  return SyntheticSpec{f, dim, range, FullEnumeration{}};
}

ErrorCode error_of(const SyntheticSpec& spec) {
  try {
    generate(spec);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "generate succeeded";
  return ErrorCode::InvalidArgument;
}

TEST(Synthetic, ParseNames) {
  for (int k = 1; k <= 8; ++k) {
    const auto f = static_cast<SyntheticFunction>(k);
    EXPECT_EQ(parse_function(to_string(f)), f);
  }
  EXPECT_FALSE(parse_function("g9").has_value());
}

TEST(Synthetic, XorLabels) {
  const auto spec = full(SyntheticFunction::g2);
  std::vector<Code> x(10, 0);
  x[1] = 1;
  EXPECT_EQ(label(spec, x), 1);
  x[0] = 1;
  EXPECT_EQ(label(spec, x), 0);
}

TEST(Synthetic, PrimeLabelsUseX10AsLeastSignificantBit) {
  const auto spec = full(SyntheticFunction::g8);
  std::vector<Code> two{0, 0, 0, 0, 0, 0, 0, 0, 1, 0};
  std::vector<Code> one{0, 0, 0, 0, 0, 0, 0, 0, 0, 1};
  EXPECT_EQ(label(spec, two), 1);
  EXPECT_EQ(label(spec, one), 0);

  const auto sieve = oracle::prime_sieve(1023);
  const auto ds = generate(spec);
  for (std::size_t v = 0; v < 1024; ++v) {
    ASSERT_EQ(ds.label(v), sieve[v] ? 1U : 0U) << v;
    // Even values (x10 = 0) are composite except 2.
    if (ds.at(v, FeatureId{9}) == 0 && v != 2) EXPECT_EQ(ds.label(v), 0U);
  }
}

TEST(Synthetic, IsPrimeAgainstSieve) {
  const auto sieve = oracle::prime_sieve(100000);
  for (std::uint64_t v = 0; v <= 100000; ++v) ASSERT_EQ(is_prime(v), sieve[v]) << v;
  EXPECT_TRUE(is_prime(4611686018427387847ULL));  // largest prime below 2^62
  EXPECT_FALSE(is_prime(4611686018427387845ULL));
}

TEST(Synthetic, LabelsMatchNaiveFormulas) {
  for (int k = 1; k <= 8; ++k) {
    const auto f = static_cast<SyntheticFunction>(k);
    for (std::size_t range : {2, 3}) {
      if (f == SyntheticFunction::g8 && range != 2) continue;
      const std::size_t dim = range == 2 ? 10 : 7;
      const auto ds = generate(full(f, dim, range));
      for (std::size_t r = 0; r < ds.rows(); ++r) {
        auto row = ds.row(r);
        std::vector<Code> x(row.begin(), row.end());
        ASSERT_EQ(static_cast<int>(ds.label(r)), oracle::naive_label(k, x)) << to_string(f);
      }
    }
  }
}

TEST(Synthetic, FullEnumerationIsTheWholeCubeOnce) {
  const auto ds = generate(full(SyntheticFunction::g2));
  EXPECT_EQ(ds.rows(), 1024U);
  std::set<std::vector<Code>> rows;
  for (std::size_t r = 0; r < ds.rows(); ++r) rows.emplace(ds.row(r).begin(), ds.row(r).end());
  EXPECT_EQ(rows.size(), 1024U);
  std::size_t ones = 0;
  for (auto y : ds.labels()) ones += y;
  EXPECT_EQ(ones, 512U);

  const auto ternary = generate(full(SyntheticFunction::g1, 6, 3));
  EXPECT_EQ(ternary.rows(), 729U);
}

TEST(Synthetic, G4HasOneHundredTwentyPositives) {
  const auto ds = generate(full(SyntheticFunction::g4));
  std::size_t positives = 0;
  for (auto y : ds.labels()) positives += y;
  // Rows with exactly three bits set: C(10, 3).
  std::size_t expected = 0;
  for (const auto& row : oracle::binary_cube(10)) {
    std::size_t bits = 0;
    for (auto b : row) bits += b;
    expected += bits == 3;
  }
  EXPECT_EQ(expected, 120U);
  EXPECT_EQ(positives, expected);
}

TEST(Synthetic, UniverseSizes) {
  EXPECT_EQ(universe_size(10, 2), 1024U);
  EXPECT_EQ(universe_size(15, 3), 14348907U);
  EXPECT_EQ(universe_size(1, 2), 2U);
  EXPECT_FALSE(universe_size(64, 2).has_value());
}

TEST(Synthetic, SampleModeIsSeededWithReplacement) {
  SyntheticSpec spec{SyntheticFunction::g1, 15, 3, UniformSample{10000, 7}};
  const auto a = generate(spec);
  const auto b = generate(spec);
  EXPECT_EQ(a.rows(), 10000U);
  EXPECT_TRUE(std::equal(a.cells().begin(), a.cells().end(), b.cells().begin()));
  spec.mode = UniformSample{10000, 8};
  const auto c = generate(spec);
  EXPECT_FALSE(std::equal(a.cells().begin(), a.cells().end(), c.cells().begin()));

  // With replacement from a tiny universe duplicates must show up.
  const auto tiny = generate(SyntheticSpec{SyntheticFunction::g2, 2, 2, UniformSample{50, 1}});
  std::set<std::vector<Code>> distinct;
  for (std::size_t r = 0; r < tiny.rows(); ++r) distinct.emplace(tiny.row(r).begin(), tiny.row(r).end());
  EXPECT_LE(distinct.size(), 4U);
}

TEST(Synthetic, Errors) {
  EXPECT_EQ(error_of(full(SyntheticFunction::g8, 10, 3)), ErrorCode::RangeUnsupported);
  EXPECT_EQ(error_of(full(SyntheticFunction::g5, 5)), ErrorCode::DimensionTooSmall);
  EXPECT_EQ(error_of(full(SyntheticFunction::g6, 2)), ErrorCode::DimensionTooSmall);
  EXPECT_EQ(error_of(full(SyntheticFunction::g1, 15, 3)), ErrorCode::EnumerationTooLarge);
  EXPECT_EQ(error_of(full(SyntheticFunction::g1, 3, 1)), ErrorCode::RangeUnsupported);
  EXPECT_THROW(label(full(SyntheticFunction::g1), std::vector<Code>{1, 1}), Error);
}

}  // namespace
}  // namespace arifs
