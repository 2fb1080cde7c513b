#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gae {

class RandomSource;

/// Fixed-length binary chromosome. Every allele is 0 or 1; the length is
/// set by the problem and preserved by every operator in the library.
class BitString {
public:
    BitString() = default;

    /// All-zeros string of length n.
    explicit BitString(std::size_t n) : bits_(n, 0) {}

    /// Takes ownership of a raw allele vector; rejects values other than 0/1.
    explicit BitString(std::vector<std::uint8_t> bits);

    static BitString zeros(std::size_t n) { return BitString(n); }
    static BitString ones(std::size_t n);

    /// Parses a string of '0'/'1' characters.
    static BitString parse(std::string_view text);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    void set(std::size_t i, std::uint8_t allele);
    void flip(std::size_t i) { bits_[i] ^= 1u; }

    std::span<const std::uint8_t> bits() const { return bits_; }
    std::span<const std::uint8_t> segment(std::size_t offset, std::size_t length) const;

    std::size_t count_ones() const;
    std::string to_string() const;

    bool operator==(const BitString&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Uniform random string of length n. n must be at least 1.
BitString random_bitstring(std::size_t n, RandomSource& rng);

} // namespace gae
