#include "arifs/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "arifs/error.hpp"

namespace arifs {

std::string_view to_string(MethodId method) noexcept {
  switch (method) {
    case MethodId::ari: return "ari";
    case MethodId::chi2: return "chi2";
    case MethodId::mi: return "mi";
    case MethodId::relief: return "relief";
  }
  return "unknown";
}

std::optional<MethodId> parse_method(std::string_view name) noexcept {
  for (auto m : {MethodId::ari, MethodId::chi2, MethodId::mi, MethodId::relief}) {
    if (name == to_string(m)) return m;
  }
  return std::nullopt;
}

namespace {

// Row-major |domain(f)| x classes table of joint counts.
struct Contingency {
  std::size_t values = 0;
  std::size_t classes = 0;
  std::vector<double> joint;
  std::vector<double> row_totals;
  std::vector<double> col_totals;
  double total = 0;

  double at(std::size_t v, std::size_t c) const { return joint[v * classes + c]; }
};

Contingency contingency(const CategoricalDataset& ds, FeatureId f) {
  Contingency t;
  t.values = ds.feature_domain(f).size();
  t.classes = ds.label_classes();
  t.joint.assign(t.values * t.classes, 0.0);
  t.row_totals.assign(t.values, 0.0);
  t.col_totals.assign(t.classes, 0.0);
  for (std::size_t r = 0; r < ds.rows(); ++r) {
    const auto v = ds.at(r, f);
    const auto y = ds.label(r);
    t.joint[v * t.classes + y] += 1;
    t.row_totals[v] += 1;
    t.col_totals[y] += 1;
  }
  t.total = static_cast<double>(ds.rows());
  return t;
}

}  // namespace

std::vector<double> chi2_scores(const CategoricalDataset& ds) {
  std::vector<double> scores(ds.features(), 0.0);
  for (std::size_t i = 0; i < ds.features(); ++i) {
    const auto t = contingency(ds, FeatureId{i});
    double stat = 0;
    for (std::size_t v = 0; v < t.values; ++v) {
      for (std::size_t c = 0; c < t.classes; ++c) {
        const double expected = t.row_totals[v] * t.col_totals[c] / t.total;
        if (expected <= 0) continue;
        const double d = t.at(v, c) - expected;
        stat += d * d / expected;
      }
    }
    scores[i] = stat;
  }
  return scores;
}

std::vector<double> mi_scores(const CategoricalDataset& ds) {
  std::vector<double> scores(ds.features(), 0.0);
  for (std::size_t i = 0; i < ds.features(); ++i) {
    const auto t = contingency(ds, FeatureId{i});
    double mi = 0;
    for (std::size_t v = 0; v < t.values; ++v) {
      for (std::size_t c = 0; c < t.classes; ++c) {
        const double nvc = t.at(v, c);
        if (nvc == 0) continue;
        // p(x,y) log(p(x,y) / (p(x) p(y))) with counts: n_xy/N log(N n_xy / (n_x n_y))
        mi += nvc / t.total * std::log(t.total * nvc / (t.row_totals[v] * t.col_totals[c]));
      }
    }
    // Cancellation can leave a tiny negative residue for independent columns.
    scores[i] = std::max(mi, 0.0);
  }
  return scores;
}

ReliefResult relief(const CategoricalDataset& ds, const ReliefOptions& options) {
  const std::size_t m = ds.rows();
  const std::size_t n = ds.features();
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "ReliefF needs at least two rows");
  if (options.k_neighbors < 1) throw Error(ErrorCode::InvalidArgument, "k_neighbors must be >= 1");

  const std::size_t classes = ds.label_classes();
  const auto counts = label_counts(ds);
  std::vector<double> prior(classes);
  for (std::size_t c = 0; c < classes; ++c) prior[c] = static_cast<double>(counts[c]) / m;

  ReliefResult result;
  result.weights.assign(n, 0.0);
  std::vector<double> update(n);

  struct Neighbour {
    std::size_t distance;
    std::size_t row;
    bool operator<(const Neighbour& o) const {
      return distance != o.distance ? distance < o.distance : row < o.row;
    }
  };
  std::vector<std::vector<Neighbour>> by_class(classes);

  for (std::size_t anchor = 0; anchor < m; ++anchor) {
    auto a = ds.row(anchor);
    for (auto& bucket : by_class) bucket.clear();
    for (std::size_t r = 0; r < m; ++r) {
      if (r == anchor) continue;
      auto b = ds.row(r);
      std::size_t d = 0;
      for (std::size_t i = 0; i < n; ++i) d += a[i] != b[i];
      by_class[ds.label(r)].push_back({d, r});
    }

    const auto own = ds.label(anchor);
    bool clamped = false;
    std::fill(update.begin(), update.end(), 0.0);
    for (std::size_t c = 0; c < classes; ++c) {
      auto& cands = by_class[c];
      if (cands.empty()) {
        // Classes absent from the data contribute nothing; an anchor alone in
        // its class has no hits at all.
        if (c == own) clamped = true;
        continue;
      }
      const std::size_t k = std::min(options.k_neighbors, cands.size());
      if (k < options.k_neighbors) clamped = true;
      std::partial_sort(cands.begin(), cands.begin() + static_cast<std::ptrdiff_t>(k), cands.end());

      double scale;
      if (c == own) {
        scale = -1.0 / static_cast<double>(k);
      } else {
        scale = prior[c] / (1.0 - prior[own]) / static_cast<double>(k);
      }
      for (std::size_t j = 0; j < k; ++j) {
        auto b = ds.row(cands[j].row);
        for (std::size_t i = 0; i < n; ++i) {
          if (a[i] != b[i]) update[i] += scale;
        }
      }
    }
    if (clamped) ++result.clamped_anchors;
    for (std::size_t i = 0; i < n; ++i) result.weights[i] += update[i] / static_cast<double>(m);
  }
  return result;
}

std::vector<double> relief_scores(const CategoricalDataset& ds, std::size_t k_neighbors) {
  return relief(ds, ReliefOptions{k_neighbors}).weights;
}

}  // namespace arifs
