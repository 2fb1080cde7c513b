#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gae {

/// Shortest decimal representation that parses back to exactly `v`.
/// Used everywhere numbers are written (CSV, manifests) so output is
/// byte-reproducible and round-trips losslessly.
std::string format_double(double v);

std::string_view trim(std::string_view s);

/// Strict full-token parses; nullopt on any trailing garbage.
std::optional<double> parse_double(std::string_view s);
std::optional<std::int64_t> parse_int(std::string_view s);
std::optional<std::uint64_t> parse_uint64(std::string_view s);

} // namespace gae
