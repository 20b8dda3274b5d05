#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace arifs::detail {

// std::uniform_int_distribution is implementation-defined; draws here go
// through plain rejection sampling so seeded output matches across standard
// libraries.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

template <typename T>
void shuffle_prefix(std::span<T> values, std::size_t prefix, std::mt19937_64& rng) {
  for (std::size_t i = 0; i < prefix && i + 1 < values.size(); ++i) {
    const auto j = i + bounded(rng, values.size() - i);
    std::swap(values[i], values[j]);
  }
}

}  // namespace arifs::detail
