#pragma once

#include <cstdint>
#include <random>

namespace gae {

/// SplitMix64 mixing step (bijective on 64-bit values).
std::uint64_t splitmix64(std::uint64_t x);

/// Seed for run `run_index` of an experiment: splitmix64(base_seed + run_index).
/// Distinct run indices give distinct seeds for a fixed base, so any run of a
/// batch can be replayed on its own.
std::uint64_t derive_run_seed(std::uint64_t base_seed, std::uint64_t run_index);

/// Deterministic random source. One instance drives one run; the same seed
/// always reproduces the same draw sequence. Draws are derived from raw
/// mt19937_64 output (not std:: distributions), so the sequence is stable
/// across standard library implementations as well.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform real in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound); bound must be at least 1.
    /// Unbiased via rejection sampling.
    std::size_t next_index(std::size_t bound);

    /// Uniform allele in {0, 1}.
    std::uint8_t next_allele() { return static_cast<std::uint8_t>(next_u64() & 1u); }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

} // namespace gae
