#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "arifs/dataset.hpp"

namespace arifs {

enum class MethodId { ari, chi2, mi, relief };

std::string_view to_string(MethodId method) noexcept;
std::optional<MethodId> parse_method(std::string_view name) noexcept;

/// Pearson chi-square statistic of each feature-value x label contingency
/// table. Cells with zero expected count are skipped.
std::vector<double> chi2_scores(const CategoricalDataset& ds);

/// Empirical mutual information I(X_i; Y) in nats.
std::vector<double> mi_scores(const CategoricalDataset& ds);

struct ReliefOptions {
  std::size_t k_neighbors = 10;
};

struct ReliefResult {
  std::vector<double> weights;
  // Anchors for which fewer than k hits or k misses (for some class) existed.
  // The update then averages over the neighbours actually available.
  std::size_t clamped_anchors = 0;
};

/// Multi-class ReliefF over categorical features.
///
/// Every row serves as an anchor. Distance is Hamming; diff() is 0/1 per
/// feature. For an anchor R of class c the k nearest hits subtract
/// diff/(m*k) and, for every other class C, the k nearest misses from C add
/// P(C)/(1-P(c)) * diff/(m*k). Distance ties are broken by lower row index.
/// Weights stay inside [-1, 1].
ReliefResult relief(const CategoricalDataset& ds, const ReliefOptions& options = {});

std::vector<double> relief_scores(const CategoricalDataset& ds, std::size_t k_neighbors);

}  // namespace arifs
