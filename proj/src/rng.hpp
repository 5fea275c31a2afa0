#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace dpc::detail {

// Uniform in [0, bound) by rejection; bit-identical on every platform,
// unlike std::uniform_int_distribution.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    std::uint64_t x = rng();
    while (x >= limit)
        x = rng();
    return x % bound;
}

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng)
{
    for (std::size_t i = items.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(bounded(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

} // namespace dpc::detail
