#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "arifs/dataset.hpp"

namespace arifs {

/// Partition of feature indices by whether two instances agree there.
/// |disagreement| is the Hamming distance.
struct PairSets {
  std::vector<std::size_t> agreement;
  std::vector<std::size_t> disagreement;

  std::size_t hamming() const noexcept { return disagreement.size(); }
};

/// Throws LengthMismatch when the rows differ in length.
PairSets pair_sets(std::span<const Code> a, std::span<const Code> b);

/// An unordered pair of row indices, stored with first < second.
using RowPair = std::pair<std::size_t, std::size_t>;

/// All row pairs at Hamming distance exactly 1 that differ at `feature`
/// (Dif), with the number of those pairs sharing a label (|Dif_Eq|).
struct DifIndex {
  FeatureId feature;
  std::vector<RowPair> pairs;  // sorted ascending
  std::size_t label_equal_count = 0;
};

/// |Dif| and |Dif_Eq| without materialising the pairs.
struct DifCounts {
  std::size_t pairs = 0;
  std::size_t label_equal = 0;

  std::size_t label_changing() const noexcept { return pairs - label_equal; }
};

DifIndex dif_index(const CategoricalDataset& ds, FeatureId feature);
DifCounts dif_counts(const CategoricalDataset& ds, FeatureId feature);

enum class ScoreKind {
  ratio,          // |Dif \ Dif_Eq| / |Dif|
  zero_variance,  // feature takes a single value on the sample
  redundant,      // feature varies but no distance-1 pair isolates it
};

std::string_view to_string(ScoreKind kind) noexcept;

/// Analogical relevance index of one feature. Sentinels are kept as a kind
/// rather than a magic number; value() reproduces the conventional numbers
/// (0 for zero variance, 2 for redundancy).
class AriScore {
 public:
  static AriScore ratio(double value) noexcept { return {ScoreKind::ratio, value}; }
  static AriScore zero_variance() noexcept { return {ScoreKind::zero_variance, 0.0}; }
  static AriScore redundant() noexcept { return {ScoreKind::redundant, 2.0}; }

  ScoreKind kind() const noexcept { return kind_; }
  double value() const noexcept { return value_; }
  bool is_ratio() const noexcept { return kind_ == ScoreKind::ratio; }

  friend bool operator==(const AriScore&, const AriScore&) = default;

 private:
  AriScore(ScoreKind kind, double value) noexcept : kind_(kind), value_(value) {}

  ScoreKind kind_;
  double value_;
};

AriScore ari_score(const CategoricalDataset& ds, FeatureId feature);
std::vector<AriScore> ari_all(const CategoricalDataset& ds);

enum class Relevance { relevant, irrelevant, undetermined };

std::string_view to_string(Relevance relevance) noexcept;

/// Relevant iff some Dif pair changes the label; irrelevant iff Dif is
/// nonempty and every pair keeps it; undetermined when Dif is empty.
Relevance classify_relevance(const CategoricalDataset& ds, FeatureId feature);

}  // namespace arifs
