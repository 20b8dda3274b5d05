#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>

#include "arifs/dataset.hpp"

namespace arifs {

/// The eight labelling functions. Formulas are written 1-based; x1 is column 0.
///
///   g1  x1!=0 and (x2!=0 or x3!=0)
///   g2  x1 != x2
///   g3  xor(xor(x1, x2), x3) with xor(a, b) = (a != b)
///   g4  x1 + ... + xn == 3
///   g5  (x1!=0 or x2!=0 or x3!=0) and (x4!=0 or x5==0 or x6!=0)
///   g6  x1!=0 and (x2!=0 or x3==0)
///   g7  x1 + x2 + x3 == 2
///   g8  the bit string x1..xn (x1 most significant) encodes a prime
enum class SyntheticFunction { g1 = 1, g2, g3, g4, g5, g6, g7, g8 };

std::string_view to_string(SyntheticFunction f) noexcept;
std::optional<SyntheticFunction> parse_function(std::string_view name) noexcept;

/// Smallest dimension for which the function's formula is defined.
std::size_t min_dimension(SyntheticFunction f) noexcept;

struct FullEnumeration {};

/// Uniform draws with replacement from the r^n universe.
struct UniformSample {
  std::size_t size = 0;
  std::uint64_t seed = 0;
};

struct SyntheticSpec {
  SyntheticFunction function = SyntheticFunction::g1;
  std::size_t dimension = 10;
  std::size_t range = 2;
  std::variant<FullEnumeration, UniformSample> mode = FullEnumeration{};
  std::uint64_t enumeration_cap = std::uint64_t{1} << 20;
};

/// r^n, or nullopt if it overflows 64 bits.
std::optional<std::uint64_t> universe_size(std::size_t dimension, std::size_t range) noexcept;

/// Throws DimensionTooSmall / RangeUnsupported / InvalidArgument for specs no
/// generator can honour (g8 needs r = 2 and at most 62 bits).
void validate(const SyntheticSpec& spec);

/// Truth value of the spec's function on x. x.size() must equal the
/// dimension and every value must be < range.
int label(const SyntheticSpec& spec, std::span<const Code> x);

/// Full enumeration yields all r^n rows in lexicographic order (x1 varies
/// slowest), so for binary data row index == the integer value of the row.
/// Throws EnumerationTooLarge when r^n exceeds spec.enumeration_cap.
CategoricalDataset generate(const SyntheticSpec& spec);

bool is_prime(std::uint64_t value) noexcept;

}  // namespace arifs
