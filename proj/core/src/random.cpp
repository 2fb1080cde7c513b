#include "gae/random.hpp"

#include <limits>
#include <stdexcept>

namespace gae {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_run_seed(std::uint64_t base_seed, std::uint64_t run_index) {
    return splitmix64(base_seed + run_index);
}

std::size_t RandomSource::next_index(std::size_t bound) {
    if (bound == 0) throw std::invalid_argument("RandomSource::next_index: bound must be positive");
    const std::uint64_t b = bound;
    // reject the incomplete top interval so every residue is equally likely
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t rem = (max % b + 1) % b;
    const std::uint64_t limit = max - rem;
    std::uint64_t r;
    do {
        r = next_u64();
    } while (r > limit);
    return static_cast<std::size_t>(r % b);
}

} // namespace gae
