#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "arifs/baselines.hpp"
#include "arifs/dataset.hpp"
#include "arifs/relevance_index.hpp"
#include "arifs/synthetic.hpp"

namespace arifs {

struct SampleFraction {
  double value = 1.0;
};
struct SampleCount {
  std::size_t value = 0;
};
using SampleSize = std::variant<SampleFraction, SampleCount>;

struct ProtocolConfig {
  std::size_t repetitions = 10;
  SampleSize sample = SampleFraction{1.0 / 3.0};
  std::uint64_t seed = 0;
  bool normalize = true;
  std::size_t relief_neighbors = 10;
};

/// Rows drawn per repetition: round(fraction * rows) or the absolute count.
/// Throws SizeOutOfRange when the result is outside [1, rows].
std::size_t resolve_sample_size(const SampleSize& sample, std::size_t rows);

/// Scores of every feature on one sample. For ARI the kinds carry the
/// sentinel branches; other methods always report ScoreKind::ratio.
struct RepetitionScores {
  std::uint64_t seed = 0;
  std::vector<double> values;
  std::vector<ScoreKind> kinds;
  std::size_t relief_clamped_anchors = 0;
};

RepetitionScores score_features(const CategoricalDataset& ds, MethodId method,
                                std::size_t relief_neighbors = 10);

struct FeatureScore {
  std::string name;
  // Mean over repetitions. For a flagged feature the mean is taken over its
  // ratio repetitions only; with none it is the sentinel value (0 or 2).
  double raw_mean = 0.0;
  std::optional<double> normalized;
  bool zero_variance = false;
  bool redundant = false;
  std::size_t ratio_repetitions = 0;
  std::size_t zero_variance_repetitions = 0;
  std::size_t redundant_repetitions = 0;

  bool flagged() const noexcept { return zero_variance || redundant; }
};

struct ScoreReport {
  MethodId method = MethodId::ari;
  ProtocolConfig config;
  std::size_t sample_size = 0;
  std::vector<FeatureScore> features;
  std::vector<RepetitionScores> repetitions;

  bool scorable() const noexcept;
  double redundant_fraction() const noexcept;
};

/// Repeated-subsampling experiment: for t = 1..repetitions draw a sample
/// with seed `cfg.seed + t`, score every feature, average, then (optionally)
/// sum-normalise the unflagged features.
///
/// A feature that is zero-variance or redundant in any repetition is flagged.
/// Flagged features are left out of the normalisation: redundant ones get no
/// normalised value, zero-variance ones get 0. Negative raw means (ReliefF)
/// count as 0 in the normaliser so normalised values stay in [0, 1].
///
/// Throws NoScorableFeature when every feature ends up flagged.
ScoreReport run_protocol(const CategoricalDataset& ds, MethodId method, const ProtocolConfig& cfg);

/// Draws the dataset for one repetition from its derived seed.
using Sampler = std::function<CategoricalDataset(std::uint64_t seed)>;

/// Same experiment over an arbitrary sampler. Never throws NoScorableFeature;
/// check ScoreReport::scorable() instead.
ScoreReport run_protocol_with(const Sampler& sampler, MethodId method, const ProtocolConfig& cfg,
                              std::size_t sample_size);

struct SweepPoint {
  std::size_t dimension = 0;
  std::size_t range = 0;
  std::optional<std::uint64_t> universe;
  std::size_t sample_size = 0;
  double coverage_percent = 0.0;
  bool full_universe = false;
  ScoreReport report;
};

/// One protocol run per sample size over a synthetic family. Each repetition
/// draws a fresh uniform sample (with replacement) from the r^n universe;
/// when the size reaches the universe and enumeration is allowed, the full
/// universe is scored instead. cfg.sample is ignored.
std::vector<SweepPoint> dimensionality_sweep(const SyntheticSpec& family,
                                             std::span<const std::size_t> sizes,
                                             const ProtocolConfig& cfg,
                                             MethodId method = MethodId::ari);

}  // namespace arifs
