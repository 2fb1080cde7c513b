#include "gae/text.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace gae {

std::string format_double(double v) {
    if (v == 0.0) return "0";
    if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
    char buf[40];
    if (std::nearbyint(v) == v && std::abs(v) < 1e15) { // prefer "20" over "2e+01"
        std::snprintf(buf, sizeof(buf), "%.0f", v);
        return buf;
    }
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_double(std::string_view s) {
    s = trim(s);
    if (s.empty() || s.size() >= 64) return std::nullopt;
    char buf[64];
    s.copy(buf, s.size());
    buf[s.size()] = '\0';
    char* end = nullptr;
    const double v = std::strtod(buf, &end);
    if (end != buf + s.size()) return std::nullopt;
    return v;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
    s = trim(s);
    if (s.empty() || s.size() >= 32) return std::nullopt;
    char buf[32];
    s.copy(buf, s.size());
    buf[s.size()] = '\0';
    char* end = nullptr;
    const long long v = std::strtoll(buf, &end, 10);
    if (end != buf + s.size()) return std::nullopt;
    return v;
}

std::optional<std::uint64_t> parse_uint64(std::string_view s) {
    s = trim(s);
    if (s.empty() || s.size() >= 32 || s.front() == '-') return std::nullopt;
    char buf[32];
    s.copy(buf, s.size());
    buf[s.size()] = '\0';
    char* end = nullptr;
    const unsigned long long v = std::strtoull(buf, &end, 10);
    if (end != buf + s.size()) return std::nullopt;
    return v;
}

} // namespace gae
