#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arifs {

// Dense category code. Codes index into the owning feature's domain and carry
// no order or magnitude; arithmetic on them is meaningless.
using Code = std::uint32_t;

struct FeatureId {
  std::size_t index = 0;

  friend auto operator<=>(const FeatureId&, const FeatureId&) = default;
};

/// Immutable m x n table of categorical codes plus a label column.
///
/// Cells are stored row-major. Each feature owns an ordered domain of raw
/// values; code c of feature i decodes to feature_domain(i)[c]. Domains may
/// list values that do not occur in the rows (e.g. after subsampling, or for
/// synthetic data), so |domain| is an upper bound on |Val(i)|.
class CategoricalDataset {
 public:
  CategoricalDataset(std::vector<Code> cells, std::vector<Code> labels,
                     std::vector<std::string> feature_names,
                     std::vector<std::vector<std::string>> feature_domains,
                     std::vector<std::string> label_domain);

  std::size_t rows() const noexcept { return labels_.size(); }
  std::size_t features() const noexcept { return names_.size(); }

  std::span<const Code> row(std::size_t r) const noexcept {
    return {cells_.data() + r * features(), features()};
  }
  Code at(std::size_t r, FeatureId f) const noexcept { return cells_[r * features() + f.index]; }
  Code label(std::size_t r) const noexcept { return labels_[r]; }

  std::span<const Code> cells() const noexcept { return cells_; }
  std::span<const Code> labels() const noexcept { return labels_; }

  const std::vector<std::string>& feature_names() const noexcept { return names_; }
  const std::vector<std::string>& feature_domain(FeatureId f) const { return domains_.at(f.index); }
  const std::vector<std::vector<std::string>>& feature_domains() const noexcept { return domains_; }
  const std::vector<std::string>& label_domain() const noexcept { return label_domain_; }

  std::size_t label_classes() const noexcept { return label_domain_.size(); }

  const std::string& decode(FeatureId f, Code c) const { return domains_.at(f.index).at(c); }
  const std::string& decode_label(Code c) const { return label_domain_.at(c); }

  // Throws FeatureOutOfRange unless f < features().
  void check_feature(FeatureId f) const;

  // Rows in the given order (repeats allowed); domains are inherited so codes
  // stay comparable with the parent.
  CategoricalDataset select_rows(std::span<const std::size_t> indices) const;

 private:
  std::vector<Code> cells_;
  std::vector<Code> labels_;
  std::vector<std::string> names_;
  std::vector<std::vector<std::string>> domains_;
  std::vector<std::string> label_domain_;
};

/// Distinct codes present in column f, ascending.
std::vector<Code> val_set(const CategoricalDataset& ds, FeatureId f);

/// Occurrence count of every code of f's domain.
std::vector<std::size_t> value_counts(const CategoricalDataset& ds, FeatureId f);

std::vector<std::size_t> label_counts(const CategoricalDataset& ds);

/// First `size` entries of a seeded uniform permutation of [0, population).
/// Prefixes are nested: for a fixed seed, a smaller draw is contained in a
/// larger one.
std::vector<std::size_t> sample_indices(std::size_t population, std::size_t size,
                                        std::uint64_t seed);

/// Uniform sample of `size` rows without replacement. Throws SizeOutOfRange
/// unless 1 <= size <= rows().
CategoricalDataset subsample(const CategoricalDataset& ds, std::size_t size, std::uint64_t seed);

// Column surgery, mostly for redundancy experiments.
CategoricalDataset duplicate_feature(const CategoricalDataset& ds, FeatureId f);
CategoricalDataset drop_feature(const CategoricalDataset& ds, FeatureId f);

struct CsvOptions {
  char delimiter = ',';
};

/// Reads a header row followed by data rows; the last column is the label.
/// Codes are assigned per column in first-appearance order. Empty cells are
/// rejected (MissingValue), as are short/long rows (RaggedRow) and inputs
/// without data rows (EmptyFile). Messages carry `source:line`.
CategoricalDataset read_csv(std::istream& in, const CsvOptions& options = {},
                            std::string_view source = "<stream>");
CategoricalDataset load_csv(const std::filesystem::path& path, const CsvOptions& options = {});

void write_csv(const CategoricalDataset& ds, std::ostream& out, const CsvOptions& options = {});
void save_csv(const CategoricalDataset& ds, const std::filesystem::path& path,
              const CsvOptions& options = {});

}  // namespace arifs
