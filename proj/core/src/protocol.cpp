#include "arifs/protocol.hpp"

#include <algorithm>
#include <cmath>

#include "arifs/error.hpp"

namespace arifs {

std::size_t resolve_sample_size(const SampleSize& sample, std::size_t rows) {
  std::size_t size = 0;
  if (const auto* f = std::get_if<SampleFraction>(&sample)) {
    if (!(f->value > 0.0 && f->value <= 1.0)) {
      throw Error(ErrorCode::SizeOutOfRange, "sample fraction must lie in (0, 1]");
    }
    size = static_cast<std::size_t>(std::llround(f->value * static_cast<double>(rows)));
  } else {
    size = std::get<SampleCount>(sample).value;
  }
  if (size < 1 || size > rows) {
    throw Error(ErrorCode::SizeOutOfRange, "sample size " + std::to_string(size) +
                                               " not in [1, " + std::to_string(rows) + "]");
  }
  return size;
}

RepetitionScores score_features(const CategoricalDataset& ds, MethodId method,
                                std::size_t relief_neighbors) {
  RepetitionScores out;
  out.kinds.assign(ds.features(), ScoreKind::ratio);
  switch (method) {
    case MethodId::ari: {
      const auto scores = ari_all(ds);
      out.values.reserve(scores.size());
      for (std::size_t i = 0; i < scores.size(); ++i) {
        out.values.push_back(scores[i].value());
        out.kinds[i] = scores[i].kind();
      }
      break;
    }
    case MethodId::chi2: out.values = chi2_scores(ds); break;
    case MethodId::mi: out.values = mi_scores(ds); break;
    case MethodId::relief: {
      auto result = relief(ds, ReliefOptions{relief_neighbors});
      out.values = std::move(result.weights);
      out.relief_clamped_anchors = result.clamped_anchors;
      break;
    }
  }
  return out;
}

bool ScoreReport::scorable() const noexcept {
  return std::any_of(features.begin(), features.end(),
                     [](const FeatureScore& f) { return !f.flagged(); });
}

double ScoreReport::redundant_fraction() const noexcept {
  if (features.empty()) return 0.0;
  const auto flagged = std::count_if(features.begin(), features.end(),
                                     [](const FeatureScore& f) { return f.redundant; });
  return static_cast<double>(flagged) / static_cast<double>(features.size());
}

namespace {

void normalize_scores(std::vector<FeatureScore>& features) {
  double total = 0.0;
  for (const auto& f : features) {
    if (!f.flagged()) total += std::max(f.raw_mean, 0.0);
  }
  for (auto& f : features) {
    if (f.redundant) {
      f.normalized.reset();
    } else if (f.zero_variance || total <= 0.0) {
      f.normalized = 0.0;
    } else {
      f.normalized = std::max(f.raw_mean, 0.0) / total;
    }
  }
}

}  // namespace

ScoreReport run_protocol_with(const Sampler& sampler, MethodId method, const ProtocolConfig& cfg,
                              std::size_t sample_size) {
  if (cfg.repetitions < 1) throw Error(ErrorCode::InvalidArgument, "repetitions must be >= 1");

  ScoreReport report;
  report.method = method;
  report.config = cfg;
  report.sample_size = sample_size;

  std::vector<double> ratio_sum;
  for (std::size_t t = 1; t <= cfg.repetitions; ++t) {
    const std::uint64_t seed = cfg.seed + t;
    const auto sample = sampler(seed);
    auto scores = score_features(sample, method, cfg.relief_neighbors);
    scores.seed = seed;

    if (report.features.empty()) {
      report.features.resize(sample.features());
      for (std::size_t i = 0; i < sample.features(); ++i) {
        report.features[i].name = sample.feature_names()[i];
      }
      ratio_sum.assign(sample.features(), 0.0);
    } else if (report.features.size() != sample.features()) {
      throw Error(ErrorCode::LengthMismatch, "sampler changed the feature count between repetitions");
    }

    for (std::size_t i = 0; i < scores.values.size(); ++i) {
      auto& f = report.features[i];
      switch (scores.kinds[i]) {
        case ScoreKind::ratio:
          ++f.ratio_repetitions;
          ratio_sum[i] += scores.values[i];
          break;
        case ScoreKind::zero_variance: ++f.zero_variance_repetitions; break;
        case ScoreKind::redundant: ++f.redundant_repetitions; break;
      }
    }
    report.repetitions.push_back(std::move(scores));
  }

  for (std::size_t i = 0; i < report.features.size(); ++i) {
    auto& f = report.features[i];
    f.zero_variance = f.zero_variance_repetitions > 0;
    f.redundant = f.redundant_repetitions > 0;
    if (!f.flagged()) {
      f.raw_mean = ratio_sum[i] / static_cast<double>(cfg.repetitions);
    } else if (f.ratio_repetitions > 0) {
      f.raw_mean = ratio_sum[i] / static_cast<double>(f.ratio_repetitions);
    } else {
      f.raw_mean = f.redundant ? AriScore::redundant().value() : AriScore::zero_variance().value();
    }
  }

  if (cfg.normalize) normalize_scores(report.features);
  return report;
}

ScoreReport run_protocol(const CategoricalDataset& ds, MethodId method, const ProtocolConfig& cfg) {
  const std::size_t size = resolve_sample_size(cfg.sample, ds.rows());
  auto report = run_protocol_with(
      [&](std::uint64_t seed) { return subsample(ds, size, seed); }, method, cfg, size);
  if (!report.scorable()) {
    throw Error(ErrorCode::NoScorableFeature,
                "every feature is zero-variance or redundant on the drawn samples");
  }
  return report;
}

std::vector<SweepPoint> dimensionality_sweep(const SyntheticSpec& family,
                                             std::span<const std::size_t> sizes,
                                             const ProtocolConfig& cfg, MethodId method) {
  if (sizes.empty()) throw Error(ErrorCode::InvalidArgument, "no sample sizes given");
  validate(family);

  std::vector<SweepPoint> points;
  for (const auto size : sizes) {
    if (size < 1) throw Error(ErrorCode::SizeOutOfRange, "sample size must be >= 1");
    SweepPoint point;
    point.dimension = family.dimension;
    point.range = family.range;
    point.universe = universe_size(family.dimension, family.range);
    point.sample_size = size;
    point.full_universe = point.universe && size >= *point.universe &&
                          *point.universe <= family.enumeration_cap;
    if (point.universe) {
      point.coverage_percent = std::min(100.0, 100.0 * static_cast<double>(size) /
                                                   static_cast<double>(*point.universe));
    }

    SyntheticSpec spec = family;
    std::optional<CategoricalDataset> universe;
    if (point.full_universe) {
      spec.mode = FullEnumeration{};
      universe.emplace(generate(spec));
      point.sample_size = universe->rows();
    }
    Sampler sampler = [&](std::uint64_t seed) {
      if (universe) return *universe;
      SyntheticSpec s = spec;
      s.mode = UniformSample{size, seed};
      return generate(s);
    };
    point.report = run_protocol_with(sampler, method, cfg, point.sample_size);
    point.report.config.sample = SampleCount{point.sample_size};
    points.push_back(std::move(point));
  }
  return points;
}

}  // namespace arifs
