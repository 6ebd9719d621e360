#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace subspace_sets {

/// Engine with a fully specified output sequence.
using Rng = std::mt19937_64;

/// Uniform integer in [0, n) by rejection sampling. Unlike
/// std::uniform_int_distribution, the result does not depend on the
/// standard library implementation.
inline std::size_t uniform_below(Rng& rng, std::size_t n) {
  const std::uint64_t bound = n;
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return static_cast<std::size_t>(x % bound);
  }
}

/// Fisher–Yates shuffle driven by uniform_below.
template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[uniform_below(rng, i)]);
  }
}

}  // namespace subspace_sets
