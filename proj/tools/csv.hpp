// csv.hpp: Locale-independent number formatting for the CSV writers

#pragma once

#include <string>

namespace entdyn::cli {

// Fixed notation, 6 decimals.
std::string format_time(double t);

// Fixed with 6 decimals when |v| >= 0.1 or v == 0, otherwise scientific with
// 6 significant digits, so every value keeps at least 6 significant digits.
std::string format_value(double v);

} // namespace entdyn::cli
