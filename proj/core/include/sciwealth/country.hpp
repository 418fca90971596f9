#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace sciwealth {

/// True when `code` is exactly two uppercase ASCII letters.
bool is_country_code_shape(std::string_view code) noexcept;

/// True when `code` is an officially assigned ISO 3166-1 alpha-2 code.
bool is_known_country(std::string_view code) noexcept;

/// Display name for an assigned code ("US" -> "United States").
std::optional<std::string_view> country_name(std::string_view code) noexcept;

/// Uppercases ASCII letters; other bytes pass through unchanged.
std::string to_upper_ascii(std::string_view text);

}  // namespace sciwealth
