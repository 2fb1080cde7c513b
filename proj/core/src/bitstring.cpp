#include "gae/bitstring.hpp"

#include <algorithm>
#include <stdexcept>

#include "gae/random.hpp"

namespace gae {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
        if (b > 1) throw std::invalid_argument("BitString: allele must be 0 or 1");
    }
}

BitString BitString::ones(std::size_t n) {
    BitString s(n);
    std::fill(s.bits_.begin(), s.bits_.end(), std::uint8_t{1});
    return s;
}

BitString BitString::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("BitString::parse: expected only '0'/'1'");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BitString(std::move(bits));
}

void BitString::set(std::size_t i, std::uint8_t allele) {
    if (allele > 1) throw std::invalid_argument("BitString::set: allele must be 0 or 1");
    bits_[i] = allele;
}

std::span<const std::uint8_t> BitString::segment(std::size_t offset, std::size_t length) const {
    if (offset + length > bits_.size())
        throw std::out_of_range("BitString::segment: range past the end");
    return std::span<const std::uint8_t>(bits_).subspan(offset, length);
}

std::size_t BitString::count_ones() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::string BitString::to_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) out.push_back(static_cast<char>('0' + b));
    return out;
}

BitString random_bitstring(std::size_t n, RandomSource& rng) {
    if (n == 0) throw std::invalid_argument("random_bitstring: length must be positive");
    std::vector<std::uint8_t> bits(n);
    for (auto& b : bits) b = rng.next_allele();
    return BitString(std::move(bits));
}

} // namespace gae
