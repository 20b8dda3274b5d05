#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arifs/evaluation.hpp"
#include "arifs/protocol.hpp"

namespace arifs {

inline constexpr int kReportFormatVersion = 1;

std::string_view library_version() noexcept;

struct DatasetDescriptor {
  std::string source;
  std::size_t rows = 0;
  std::size_t features = 0;
  std::size_t label_classes = 0;
  std::vector<std::string> feature_names;
};

DatasetDescriptor describe(const CategoricalDataset& ds, std::string source);

struct MethodAccuracy {
  MethodId method = MethodId::ari;
  std::vector<FeatureId> features;
  CvResult cv;
};

struct AccuracySection {
  EvalConfig config;
  CvResult baseline;
  std::vector<MethodAccuracy> methods;
};

/// Everything one CLI invocation produced. The human-readable table is
/// rendered from this document; the JSON form is the reproducible artefact.
struct ReportDocument {
  std::string command;
  DatasetDescriptor dataset;
  std::uint64_t seed = 0;
  std::vector<ScoreReport> scores;
  std::optional<AccuracySection> accuracy;
  std::vector<SweepPoint> sweep;
};

std::string to_json(const ReportDocument& doc, int indent = 2);
void write_table(const ReportDocument& doc, std::ostream& out);

}  // namespace arifs
