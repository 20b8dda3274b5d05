#include "arifs/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace arifs {

using nlohmann::ordered_json;

std::string_view library_version() noexcept { return ARIFS_VERSION; }

DatasetDescriptor describe(const CategoricalDataset& ds, std::string source) {
  return {std::move(source), ds.rows(), ds.features(), ds.label_classes(), ds.feature_names()};
}

namespace {

ordered_json config_json(const ProtocolConfig& cfg) {
  ordered_json j;
  j["repetitions"] = cfg.repetitions;
  if (const auto* f = std::get_if<SampleFraction>(&cfg.sample)) {
    j["sample"] = {{"fraction", f->value}};
  } else {
    j["sample"] = {{"count", std::get<SampleCount>(cfg.sample).value}};
  }
  j["seed"] = cfg.seed;
  j["normalize"] = cfg.normalize;
  j["relief_neighbors"] = cfg.relief_neighbors;
  return j;
}

ordered_json score_json(const ScoreReport& report) {
  ordered_json j;
  j["method"] = to_string(report.method);
  j["config"] = config_json(report.config);
  j["sample_size"] = report.sample_size;
  j["scorable"] = report.scorable();
  j["redundant_fraction"] = report.redundant_fraction();
  ordered_json features = ordered_json::array();
  for (std::size_t i = 0; i < report.features.size(); ++i) {
    const auto& f = report.features[i];
    ordered_json row;
    row["index"] = i;
    row["name"] = f.name;
    row["raw_mean"] = f.raw_mean;
    row["normalized"] = f.normalized ? ordered_json(*f.normalized) : ordered_json(nullptr);
    ordered_json flags = ordered_json::array();
    if (f.zero_variance) flags.push_back(to_string(ScoreKind::zero_variance));
    if (f.redundant) flags.push_back(to_string(ScoreKind::redundant));
    row["flags"] = flags;
    row["repetitions"] = {{"ratio", f.ratio_repetitions},
                          {"zero_variance", f.zero_variance_repetitions},
                          {"redundant", f.redundant_repetitions}};
    features.push_back(std::move(row));
  }
  j["features"] = std::move(features);
  ordered_json reps = ordered_json::array();
  for (const auto& rep : report.repetitions) {
    ordered_json r;
    r["seed"] = rep.seed;
    r["values"] = rep.values;
    ordered_json kinds = ordered_json::array();
    for (auto k : rep.kinds) kinds.push_back(to_string(k));
    r["kinds"] = std::move(kinds);
    if (report.method == MethodId::relief) r["relief_clamped_anchors"] = rep.relief_clamped_anchors;
    reps.push_back(std::move(r));
  }
  j["repetitions"] = std::move(reps);
  return j;
}

ordered_json cv_json(const CvResult& cv) {
  return {{"accuracy", cv.accuracy},
          {"fold_accuracies", cv.fold_accuracies},
          {"stratified", cv.stratified},
          {"warnings", cv.warnings}};
}

// Per-method score vectors in a shape plotting tools consume directly.
ordered_json plot_json(const ReportDocument& doc) {
  ordered_json j;
  j["features"] = doc.dataset.feature_names;
  ordered_json series = ordered_json::object();
  for (const auto& report : doc.scores) {
    ordered_json values = ordered_json::array();
    for (const auto& f : report.features) {
      if (report.config.normalize) {
        values.push_back(f.normalized ? ordered_json(*f.normalized) : ordered_json(nullptr));
      } else {
        values.push_back(f.raw_mean);
      }
    }
    series[std::string(to_string(report.method))] = std::move(values);
  }
  j["series"] = std::move(series);
  j["value"] = doc.scores.empty() || doc.scores.front().config.normalize ? "normalized" : "raw_mean";
  return j;
}

std::string format_number(double v, int precision = 4) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << v;
  return os.str();
}

std::string describe_sample(const ProtocolConfig& cfg, std::size_t size) {
  std::ostringstream os;
  os << size << " rows";
  if (const auto* f = std::get_if<SampleFraction>(&cfg.sample)) os << " (fraction " << f->value << ")";
  return os.str();
}

}  // namespace

std::string to_json(const ReportDocument& doc, int indent) {
  ordered_json j;
  j["format_version"] = kReportFormatVersion;
  j["tool"] = {{"name", "arifs"}, {"version", library_version()}};
  j["command"] = doc.command;
  j["seed"] = doc.seed;
  j["dataset"] = {{"source", doc.dataset.source},
                  {"rows", doc.dataset.rows},
                  {"features", doc.dataset.features},
                  {"label_classes", doc.dataset.label_classes},
                  {"feature_names", doc.dataset.feature_names}};
  if (!doc.scores.empty()) {
    ordered_json scores = ordered_json::array();
    for (const auto& report : doc.scores) scores.push_back(score_json(report));
    j["scores"] = std::move(scores);
    j["plot"] = plot_json(doc);
  }
  if (doc.accuracy) {
    const auto& acc = *doc.accuracy;
    ordered_json a;
    a["config"] = {{"k", acc.config.k},
                   {"folds", acc.config.folds},
                   {"seed", acc.config.seed},
                   {"stratified", acc.config.stratified},
                   {"classifier",
                    {{"type", "logistic_regression"},
                     {"l2_strength", acc.config.classifier.l2_strength},
                     {"max_iterations", acc.config.classifier.max_iterations},
                     {"learning_rate", acc.config.classifier.learning_rate}}}};
    a["baseline"] = cv_json(acc.baseline);
    ordered_json methods = ordered_json::array();
    for (const auto& m : acc.methods) {
      ordered_json e;
      e["method"] = to_string(m.method);
      ordered_json features = ordered_json::array();
      for (auto f : m.features) features.push_back(f.index);
      e["features"] = std::move(features);
      e["features_used"] = m.features.size();
      e["fewer_than_k"] = m.features.size() < acc.config.k;
      e["cv"] = cv_json(m.cv);
      methods.push_back(std::move(e));
    }
    a["methods"] = std::move(methods);
    j["accuracy"] = std::move(a);
  }
  if (!doc.sweep.empty()) {
    ordered_json sweep = ordered_json::array();
    for (const auto& p : doc.sweep) {
      ordered_json e;
      e["dimension"] = p.dimension;
      e["range"] = p.range;
      e["universe"] = p.universe ? ordered_json(*p.universe) : ordered_json(nullptr);
      e["sample_size"] = p.sample_size;
      e["coverage_percent"] = p.coverage_percent;
      e["full_universe"] = p.full_universe;
      ordered_json freq = ordered_json::array();
      for (const auto& f : p.report.features) {
        const double reps = static_cast<double>(p.report.repetitions.size());
        freq.push_back({{"name", f.name},
                        {"redundant", static_cast<double>(f.redundant_repetitions) / reps},
                        {"zero_variance", static_cast<double>(f.zero_variance_repetitions) / reps}});
      }
      e["sentinel_frequency"] = std::move(freq);
      e["report"] = score_json(p.report);
      sweep.push_back(std::move(e));
    }
    j["sweep"] = std::move(sweep);
  }
  return j.dump(indent) + "\n";
}

void write_table(const ReportDocument& doc, std::ostream& out) {
  out << "dataset: " << doc.dataset.source << " (" << doc.dataset.rows << " rows, "
      << doc.dataset.features << " features, " << doc.dataset.label_classes << " classes)\n";

  for (const auto& report : doc.scores) {
    out << "\n[" << to_string(report.method) << "] repetitions=" << report.config.repetitions
        << " sample=" << describe_sample(report.config, report.sample_size)
        << " seed=" << report.config.seed << (report.config.normalize ? " normalized" : " raw")
        << "\n";
    out << std::left << std::setw(16) << "feature" << std::right << std::setw(12) << "raw_mean"
        << std::setw(12) << "normalized" << "  flags\n";
    for (const auto& f : report.features) {
      out << std::left << std::setw(16) << f.name << std::right << std::setw(12)
          << format_number(f.raw_mean) << std::setw(12)
          << (f.normalized ? format_number(*f.normalized) : std::string("-")) << "  ";
      if (f.redundant) out << "redundant(" << f.redundant_repetitions << ") ";
      if (f.zero_variance) out << "zero_variance(" << f.zero_variance_repetitions << ")";
      out << "\n";
    }
  }

  if (doc.accuracy) {
    const auto& acc = *doc.accuracy;
    out << "\naccuracy: logistic regression, " << acc.config.folds << "-fold CV, k="
        << acc.config.k << "\n";
    out << std::left << std::setw(12) << "selection" << std::right << std::setw(10) << "acc%"
        << "  features\n";
    out << std::left << std::setw(12) << "baseline" << std::right << std::setw(10)
        << format_number(100.0 * acc.baseline.accuracy, 2) << "  all " << doc.dataset.features
        << "\n";
    for (const auto& m : acc.methods) {
      out << std::left << std::setw(12) << to_string(m.method) << std::right << std::setw(10)
          << format_number(100.0 * m.cv.accuracy, 2) << "  ";
      for (std::size_t i = 0; i < m.features.size(); ++i) {
        out << (i ? "," : "") << doc.dataset.feature_names[m.features[i].index];
      }
      if (m.features.size() < acc.config.k) {
        out << "  (only " << m.features.size() << " of k=" << acc.config.k << " features used)";
      }
      out << "\n";
    }
    auto warn = [&](const CvResult& cv) {
      for (const auto& w : cv.warnings) out << "warning: " << w << "\n";
    };
    warn(acc.baseline);
  }

  if (!doc.sweep.empty()) {
    out << std::left << std::setw(6) << "dim" << std::setw(7) << "range" << std::right
        << std::setw(16) << "universe" << std::setw(10) << "sample" << std::setw(11) << "coverage"
        << std::setw(12) << "redundant" << "  top ratio feature\n";
    for (const auto& p : doc.sweep) {
      std::string top = "-";
      double best = -1;
      for (const auto& f : p.report.features) {
        if (f.ratio_repetitions > 0 && f.raw_mean > best) {
          best = f.raw_mean;
          top = f.name + "=" + format_number(f.raw_mean, 3);
        }
      }
      out << std::left << std::setw(6) << p.dimension << std::setw(7) << p.range << std::right
          << std::setw(16) << (p.universe ? std::to_string(*p.universe) : std::string("overflow"))
          << std::setw(10) << p.sample_size << std::setw(10) << format_number(p.coverage_percent, 1)
          << "%" << std::setw(11) << format_number(100.0 * p.report.redundant_fraction(), 1) << "%"
          << "  " << top << "\n";
    }
  }
}

}  // namespace arifs
