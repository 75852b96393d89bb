#include "csv.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace entdyn::cli {

namespace {

std::string to_chars_string(double v, std::chars_format fmt, int precision) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, fmt, precision);
    if (ec != std::errc{}) return "nan";
    return {buf.data(), end};
}

} // namespace

std::string format_time(double t) {
    if (t == 0.0) t = 0.0; // drop negative zero
    return to_chars_string(t, std::chars_format::fixed, 6);
}

std::string format_value(double v) {
    if (v == 0.0) return "0.000000";
    if (std::abs(v) >= 0.1) return to_chars_string(v, std::chars_format::fixed, 6);
    return to_chars_string(v, std::chars_format::scientific, 5);
}

} // namespace entdyn::cli
