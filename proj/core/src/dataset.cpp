#include "arifs/dataset.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "arifs/error.hpp"
#include "random.hpp"

namespace arifs {

CategoricalDataset::CategoricalDataset(std::vector<Code> cells, std::vector<Code> labels,
                                       std::vector<std::string> feature_names,
                                       std::vector<std::vector<std::string>> feature_domains,
                                       std::vector<std::string> label_domain)
    : cells_(std::move(cells)),
      labels_(std::move(labels)),
      names_(std::move(feature_names)),
      domains_(std::move(feature_domains)),
      label_domain_(std::move(label_domain)) {
  const std::size_t m = labels_.size();
  const std::size_t n = names_.size();
  if (m == 0) throw Error(ErrorCode::EmptyFile, "dataset has no rows");
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "dataset has no features");
  if (cells_.size() != m * n) {
    throw Error(ErrorCode::RaggedRow, "cell count " + std::to_string(cells_.size()) +
                                          " does not match " + std::to_string(m) + " x " +
                                          std::to_string(n));
  }
  if (domains_.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "one domain per feature is required");
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      if (cells_[r * n + i] >= domains_[i].size()) {
        throw Error(ErrorCode::InvalidArgument, "code out of domain at row " + std::to_string(r) +
                                                    ", feature " + names_[i]);
      }
    }
    if (labels_[r] >= label_domain_.size()) {
      throw Error(ErrorCode::InvalidArgument, "label code out of domain at row " + std::to_string(r));
    }
  }
}

void CategoricalDataset::check_feature(FeatureId f) const {
  if (f.index >= features()) {
    throw Error(ErrorCode::FeatureOutOfRange, "feature " + std::to_string(f.index) +
                                                  " not in [0, " + std::to_string(features()) + ")");
  }
}

CategoricalDataset CategoricalDataset::select_rows(std::span<const std::size_t> indices) const {
  if (indices.empty()) throw Error(ErrorCode::SizeOutOfRange, "cannot select zero rows");
  const std::size_t n = features();
  std::vector<Code> cells;
  cells.reserve(indices.size() * n);
  std::vector<Code> labels;
  labels.reserve(indices.size());
  for (auto r : indices) {
    if (r >= rows()) throw Error(ErrorCode::SizeOutOfRange, "row index " + std::to_string(r));
    auto src = row(r);
    cells.insert(cells.end(), src.begin(), src.end());
    labels.push_back(labels_[r]);
  }
  return {std::move(cells), std::move(labels), names_, domains_, label_domain_};
}

std::vector<Code> val_set(const CategoricalDataset& ds, FeatureId f) {
  const auto counts = value_counts(ds, f);
  std::vector<Code> values;
  for (Code c = 0; c < counts.size(); ++c) {
    if (counts[c] > 0) values.push_back(c);
  }
  return values;
}

std::vector<std::size_t> value_counts(const CategoricalDataset& ds, FeatureId f) {
  ds.check_feature(f);
  std::vector<std::size_t> counts(ds.feature_domain(f).size(), 0);
  for (std::size_t r = 0; r < ds.rows(); ++r) ++counts[ds.at(r, f)];
  return counts;
}

std::vector<std::size_t> label_counts(const CategoricalDataset& ds) {
  std::vector<std::size_t> counts(ds.label_classes(), 0);
  for (auto y : ds.labels()) ++counts[y];
  return counts;
}

std::vector<std::size_t> sample_indices(std::size_t population, std::size_t size,
                                        std::uint64_t seed) {
  if (size < 1 || size > population) {
    throw Error(ErrorCode::SizeOutOfRange, "sample size " + std::to_string(size) +
                                               " not in [1, " + std::to_string(population) + "]");
  }
  std::vector<std::size_t> order(population);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  detail::shuffle_prefix(std::span<std::size_t>(order), size, rng);
  order.resize(size);
  return order;
}

CategoricalDataset subsample(const CategoricalDataset& ds, std::size_t size, std::uint64_t seed) {
  const auto picked = sample_indices(ds.rows(), size, seed);
  return ds.select_rows(picked);
}

namespace {

CategoricalDataset with_column_order(const CategoricalDataset& ds,
                                     const std::vector<std::size_t>& columns,
                                     std::vector<std::string> names) {
  std::vector<Code> cells;
  cells.reserve(ds.rows() * columns.size());
  for (std::size_t r = 0; r < ds.rows(); ++r) {
    auto src = ds.row(r);
    for (auto c : columns) cells.push_back(src[c]);
  }
  std::vector<std::vector<std::string>> domains;
  for (auto c : columns) domains.push_back(ds.feature_domain(FeatureId{c}));
  return {std::move(cells), std::vector<Code>(ds.labels().begin(), ds.labels().end()),
          std::move(names), std::move(domains), ds.label_domain()};
}

}  // namespace

CategoricalDataset duplicate_feature(const CategoricalDataset& ds, FeatureId f) {
  ds.check_feature(f);
  std::vector<std::size_t> columns(ds.features());
  std::iota(columns.begin(), columns.end(), std::size_t{0});
  columns.push_back(f.index);
  auto names = ds.feature_names();
  names.push_back(names[f.index] + "_copy");
  return with_column_order(ds, columns, std::move(names));
}

CategoricalDataset drop_feature(const CategoricalDataset& ds, FeatureId f) {
  ds.check_feature(f);
  if (ds.features() == 1) throw Error(ErrorCode::InvalidArgument, "cannot drop the only feature");
  std::vector<std::size_t> columns;
  std::vector<std::string> names;
  for (std::size_t c = 0; c < ds.features(); ++c) {
    if (c == f.index) continue;
    columns.push_back(c);
    names.push_back(ds.feature_names()[c]);
  }
  return with_column_order(ds, columns, std::move(names));
}

}  // namespace arifs
