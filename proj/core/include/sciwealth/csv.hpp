#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sciwealth::csv {

enum class Dialect { csv, tsv };

/// Reads the next logical row. CSV honors RFC-4180 quoting (embedded
/// delimiters, doubled quotes, newlines inside quoted fields); TSV is a
/// plain tab split. Lines whose first non-space byte is '#' and blank
/// lines are skipped. Returns nullopt at end of input.
std::optional<std::vector<std::string>> read_row(std::istream& in, Dialect dialect);

/// Writes one row, quoting CSV fields that need it. Lines end with '\n'.
void write_row(std::ostream& out, const std::vector<std::string>& fields, Dialect dialect);

/// Field-level escaping used by write_row.
std::string escape_field(std::string_view field, Dialect dialect);

}  // namespace sciwealth::csv
