#pragma once

#include <fstream>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "sciwealth/cohorts.hpp"
#include "sciwealth/csv.hpp"
#include "sciwealth/format.hpp"

namespace sciwealth::cli {

/// Opens for reading or throws Error(io_error) naming the path.
std::ifstream open_input(const std::string& path);

/// Runs `write` against the named file, or stdout when path is "-".
void with_output(const std::string& path, const std::function<void(std::ostream&)>& write);

/// "auto" picks the dialect from the path extension (.csv -> csv,
/// anything else -> tsv).
csv::Dialect resolve_dialect(const std::string& format, const std::string& path);

Precision resolve_precision(const std::string& name);

/// Splits "CN,RU" into {"CN","RU"}; empty input gives an empty set.
std::set<std::string> parse_code_set(const std::string& csv_list);

/// Filesystem-safe slug: lowercased alphanumerics, runs of anything
/// else collapsed to '-'.
std::string slugify(const std::string& text);

/// Loads indicators + GDP + optional cohort config into joined rows.
/// With cohorts, rows come back in cohort-union order and coverage gaps
/// are reported on stderr; without, rows keep indicator-file order.
std::vector<CountryRow> load_joined_rows(const std::string& indicators_path,
                                         const std::string& gdp_path,
                                         const std::string& cohorts_path,
                                         std::vector<Cohort>* cohorts_out);

}  // namespace sciwealth::cli
