#pragma once

#include <cstdint>
#include <string>

namespace sciwealth {

enum class Precision { display, full };

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

/// Fixed-point with the given number of decimals (display rounding).
std::string format_fixed(double value, int decimals);

/// Scientific notation with three significant figures, e.g. "6.02E+12".
std::string format_sci3(double value);

std::string format_int(std::int64_t value);

}  // namespace sciwealth
