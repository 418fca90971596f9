#include "sciwealth/format.hpp"

#include <charconv>
#include <cstdio>

namespace sciwealth {

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;  // 64 bytes always suffice for a double
  return std::string(buf, ptr);
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  int n = std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return std::string(buf, static_cast<std::size_t>(n));
}

std::string format_sci3(double value) {
  char buf[64];
  int n = std::snprintf(buf, sizeof(buf), "%.2E", value);
  return std::string(buf, static_cast<std::size_t>(n));
}

std::string format_int(std::int64_t value) {
  return std::to_string(value);
}

}  // namespace sciwealth
