#include "arifs/relevance_index.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "arifs/error.hpp"

namespace arifs {

PairSets pair_sets(std::span<const Code> a, std::span<const Code> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "rows of length " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
  PairSets sets;
  for (std::size_t i = 0; i < a.size(); ++i) {
    (a[i] == b[i] ? sets.agreement : sets.disagreement).push_back(i);
  }
  return sets;
}

std::string_view to_string(ScoreKind kind) noexcept {
  switch (kind) {
    case ScoreKind::ratio: return "ratio";
    case ScoreKind::zero_variance: return "zero_variance";
    case ScoreKind::redundant: return "redundant";
  }
  return "unknown";
}

std::string_view to_string(Relevance relevance) noexcept {
  switch (relevance) {
    case Relevance::relevant: return "relevant";
    case Relevance::irrelevant: return "irrelevant";
    case Relevance::undetermined: return "undetermined";
  }
  return "unknown";
}

namespace {

std::uint64_t splitmix(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t cell_hash(std::size_t column, Code value) noexcept {
  return splitmix((static_cast<std::uint64_t>(column) << 32) | value);
}

// Rows bucketed by their projection onto every column except `feature`.
// Two rows form a Dif pair iff they share a bucket and differ at `feature`.
// Within a bucket rows are ordered by (value at feature, label).
class MaskedBuckets {
 public:
  MaskedBuckets(const CategoricalDataset& ds, FeatureId feature) : ds_(ds), feature_(feature) {
    ds.check_feature(feature);
    const std::size_t m = ds.rows();
    const std::size_t n = ds.features();

    // The masked hash is additive over cells, so it is the full-row hash
    // with the feature's own cell subtracted.
    keys_.resize(m);
    for (std::size_t r = 0; r < m; ++r) {
      auto row = ds.row(r);
      std::uint64_t h = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != feature.index) h += cell_hash(c, row[c]);
      }
      keys_[r] = h;
    }

    order_.resize(m);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      if (keys_[a] != keys_[b]) return keys_[a] < keys_[b];
      if (int cmp = compare_masked(a, b); cmp != 0) return cmp < 0;
      const Code va = ds_.at(a, feature_), vb = ds_.at(b, feature_);
      if (va != vb) return va < vb;
      if (ds_.label(a) != ds_.label(b)) return ds_.label(a) < ds_.label(b);
      return a < b;
    });

    std::size_t begin = 0;
    for (std::size_t k = 1; k <= m; ++k) {
      if (k == m || !same_bucket(order_[k - 1], order_[k])) {
        if (k - begin >= 2) buckets_.emplace_back(begin, k);
        begin = k;
      }
    }
  }

  // Calls visit(span of row indices) for every bucket holding >= 2 rows.
  template <typename Visit>
  void for_each_bucket(Visit&& visit) const {
    for (auto [begin, end] : buckets_) {
      visit(std::span<const std::size_t>(order_.data() + begin, end - begin));
    }
  }

 private:
  int compare_masked(std::size_t a, std::size_t b) const noexcept {
    auto ra = ds_.row(a);
    auto rb = ds_.row(b);
    for (std::size_t c = 0; c < ra.size(); ++c) {
      if (c == feature_.index || ra[c] == rb[c]) continue;
      return ra[c] < rb[c] ? -1 : 1;
    }
    return 0;
  }

  bool same_bucket(std::size_t a, std::size_t b) const noexcept {
    return keys_[a] == keys_[b] && compare_masked(a, b) == 0;
  }

  const CategoricalDataset& ds_;
  FeatureId feature_;
  std::vector<std::uint64_t> keys_;
  std::vector<std::size_t> order_;
  std::vector<std::pair<std::size_t, std::size_t>> buckets_;
};

std::size_t choose2(std::size_t k) noexcept { return k * (k - 1) / 2; }

}  // namespace

DifCounts dif_counts(const CategoricalDataset& ds, FeatureId feature) {
  const MaskedBuckets buckets(ds, feature);
  DifCounts counts;
  std::vector<std::size_t> per_label(ds.label_classes(), 0);
  buckets.for_each_bucket([&](std::span<const std::size_t> rows) {
    // Cross-value pairs = all pairs minus same-value pairs. Rows arrive
    // sorted by (value, label), so equal values and equal (value, label)
    // combinations form contiguous runs.
    std::size_t same_value = 0, same_value_label = 0;
    std::size_t run_value = 1, run_value_label = 1;
    for (std::size_t k = 1; k <= rows.size(); ++k) {
      const bool end = k == rows.size();
      const bool value_eq = !end && ds.at(rows[k], feature) == ds.at(rows[k - 1], feature);
      const bool label_eq = value_eq && ds.label(rows[k]) == ds.label(rows[k - 1]);
      if (value_eq) {
        ++run_value;
      } else {
        same_value += choose2(run_value);
        run_value = 1;
      }
      if (label_eq) {
        ++run_value_label;
      } else {
        same_value_label += choose2(run_value_label);
        run_value_label = 1;
      }
    }
    std::size_t same_label = 0;
    for (auto r : rows) ++per_label[ds.label(r)];
    for (auto r : rows) {
      auto& c = per_label[ds.label(r)];
      same_label += choose2(c);
      c = 0;
    }
    counts.pairs += choose2(rows.size()) - same_value;
    counts.label_equal += same_label - same_value_label;
  });
  return counts;
}

DifIndex dif_index(const CategoricalDataset& ds, FeatureId feature) {
  const MaskedBuckets buckets(ds, feature);
  DifIndex index{feature, {}, 0};
  buckets.for_each_bucket([&](std::span<const std::size_t> rows) {
    for (std::size_t a = 0; a < rows.size(); ++a) {
      for (std::size_t b = a + 1; b < rows.size(); ++b) {
        const auto ra = rows[a], rb = rows[b];
        if (ds.at(ra, feature) == ds.at(rb, feature)) continue;
        index.pairs.emplace_back(std::min(ra, rb), std::max(ra, rb));
        if (ds.label(ra) == ds.label(rb)) ++index.label_equal_count;
      }
    }
  });
  std::sort(index.pairs.begin(), index.pairs.end());
  return index;
}

AriScore ari_score(const CategoricalDataset& ds, FeatureId feature) {
  ds.check_feature(feature);
  const Code first = ds.at(0, feature);
  bool varies = false;
  for (std::size_t r = 1; r < ds.rows() && !varies; ++r) varies = ds.at(r, feature) != first;
  if (!varies) return AriScore::zero_variance();

  const auto counts = dif_counts(ds, feature);
  if (counts.pairs == 0) return AriScore::redundant();
  return AriScore::ratio(static_cast<double>(counts.label_changing()) /
                         static_cast<double>(counts.pairs));
}

std::vector<AriScore> ari_all(const CategoricalDataset& ds) {
  std::vector<AriScore> scores;
  scores.reserve(ds.features());
  for (std::size_t i = 0; i < ds.features(); ++i) scores.push_back(ari_score(ds, FeatureId{i}));
  return scores;
}

Relevance classify_relevance(const CategoricalDataset& ds, FeatureId feature) {
  const auto counts = dif_counts(ds, feature);
  if (counts.pairs == 0) return Relevance::undetermined;
  return counts.label_changing() > 0 ? Relevance::relevant : Relevance::irrelevant;
}

}  // namespace arifs
