#include "arifs/synthetic.hpp"

#include <random>
#include <string>

#include "arifs/error.hpp"
#include "random.hpp"

namespace arifs {

std::string_view to_string(SyntheticFunction f) noexcept {
  switch (f) {
    case SyntheticFunction::g1: return "g1";
    case SyntheticFunction::g2: return "g2";
    case SyntheticFunction::g3: return "g3";
    case SyntheticFunction::g4: return "g4";
    case SyntheticFunction::g5: return "g5";
    case SyntheticFunction::g6: return "g6";
    case SyntheticFunction::g7: return "g7";
    case SyntheticFunction::g8: return "g8";
  }
  return "unknown";
}

std::optional<SyntheticFunction> parse_function(std::string_view name) noexcept {
  for (int k = 1; k <= 8; ++k) {
    const auto f = static_cast<SyntheticFunction>(k);
    if (name == to_string(f)) return f;
  }
  return std::nullopt;
}

std::size_t min_dimension(SyntheticFunction f) noexcept {
  switch (f) {
    case SyntheticFunction::g2: return 2;
    case SyntheticFunction::g1:
    case SyntheticFunction::g3:
    case SyntheticFunction::g6:
    case SyntheticFunction::g7: return 3;
    case SyntheticFunction::g5: return 6;
    case SyntheticFunction::g4:
    case SyntheticFunction::g8: return 1;
  }
  return 1;
}

std::optional<std::uint64_t> universe_size(std::size_t dimension, std::size_t range) noexcept {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < dimension; ++i) {
    if (range != 0 && size > UINT64_MAX / range) return std::nullopt;
    size *= range;
  }
  return size;
}

void validate(const SyntheticSpec& spec) {
  const auto name = std::string(to_string(spec.function));
  if (spec.range < 2) {
    throw Error(ErrorCode::RangeUnsupported, "categorical range must be >= 2");
  }
  if (spec.dimension < min_dimension(spec.function)) {
    throw Error(ErrorCode::DimensionTooSmall,
                name + " needs dimension >= " + std::to_string(min_dimension(spec.function)));
  }
  if (spec.function == SyntheticFunction::g8) {
    if (spec.range != 2) {
      throw Error(ErrorCode::RangeUnsupported, "g8 is defined on bit strings only (range 2)");
    }
    if (spec.dimension > 62) {
      throw Error(ErrorCode::InvalidArgument, "g8 supports at most 62 bits");
    }
  }
  if (const auto* s = std::get_if<UniformSample>(&spec.mode); s && s->size == 0) {
    throw Error(ErrorCode::SizeOutOfRange, "sample size must be >= 1");
  }
}

namespace {

__extension__ using uint128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t value) noexcept {
  if (value < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (value % p == 0) return value == p;
  }
  // Deterministic Miller-Rabin: these bases cover every 64-bit integer.
  std::uint64_t d = value - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, value);
    if (x == 1 || x == value - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mul_mod(x, x, value);
      if (x == value - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

int label(const SyntheticSpec& spec, std::span<const Code> x) {
  if (x.size() != spec.dimension) {
    throw Error(ErrorCode::LengthMismatch, "row has " + std::to_string(x.size()) +
                                               " values, spec dimension is " +
                                               std::to_string(spec.dimension));
  }
  for (auto v : x) {
    if (v >= spec.range) throw Error(ErrorCode::InvalidArgument, "value outside categorical range");
  }
  auto nz = [&](std::size_t one_based) { return x[one_based - 1] != 0; };
  auto sum = [&](std::size_t count) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < count; ++i) s += x[i];
    return s;
  };
  switch (spec.function) {
    case SyntheticFunction::g1: return nz(1) && (nz(2) || nz(3));
    case SyntheticFunction::g2: return x[0] != x[1];
    case SyntheticFunction::g3: {
      // xor(a, b) = (a != b), applied literally: the inner truth value is
      // compared with the category value of x3.
      const Code inner = x[0] != x[1];
      return inner != x[2];
    }
    case SyntheticFunction::g4: return sum(x.size()) == 3;
    case SyntheticFunction::g5: return (nz(1) || nz(2) || nz(3)) && (nz(4) || !nz(5) || nz(6));
    case SyntheticFunction::g6: return nz(1) && (nz(2) || !nz(3));
    case SyntheticFunction::g7: return sum(3) == 2;
    case SyntheticFunction::g8: {
      std::uint64_t value = 0;
      for (auto bit : x) value = (value << 1) | bit;
      return is_prime(value);
    }
  }
  return 0;
}

CategoricalDataset generate(const SyntheticSpec& spec) {
  validate(spec);
  const std::size_t n = spec.dimension;
  const std::size_t r = spec.range;

  std::vector<Code> cells;
  std::size_t rows = 0;
  if (std::holds_alternative<FullEnumeration>(spec.mode)) {
    const auto universe = universe_size(n, r);
    if (!universe || *universe > spec.enumeration_cap) {
      throw Error(ErrorCode::EnumerationTooLarge,
                  std::to_string(r) + "^" + std::to_string(n) + " rows exceeds the cap of " +
                      std::to_string(spec.enumeration_cap));
    }
    rows = static_cast<std::size_t>(*universe);
    cells.resize(rows * n);
    for (std::size_t k = 0; k < rows; ++k) {
      std::size_t v = k;
      for (std::size_t i = n; i-- > 0;) {
        cells[k * n + i] = static_cast<Code>(v % r);
        v /= r;
      }
    }
  } else {
    const auto& sample = std::get<UniformSample>(spec.mode);
    rows = sample.size;
    cells.resize(rows * n);
    std::mt19937_64 rng(sample.seed);
    for (auto& c : cells) c = static_cast<Code>(detail::bounded(rng, r));
  }

  std::vector<Code> labels(rows);
  for (std::size_t k = 0; k < rows; ++k) {
    labels[k] = static_cast<Code>(label(spec, std::span<const Code>(cells.data() + k * n, n)));
  }

  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  std::vector<std::string> domain;
  for (std::size_t v = 0; v < r; ++v) domain.push_back(std::to_string(v));
  return {std::move(cells), std::move(labels), std::move(names),
          std::vector<std::vector<std::string>>(n, domain), {"0", "1"}};
}

}  // namespace arifs
