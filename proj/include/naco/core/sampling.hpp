#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace naco::core {

/// Unbiased draw from [0, bound) taken straight from the engine, so results do
/// not depend on the standard library's distribution implementation.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);

/// Sorted uniform k-subset of [0, n) (all of [0, n) when k >= n). Reproducible
/// across platforms for a given seed.
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace naco::core
