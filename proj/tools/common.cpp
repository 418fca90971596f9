#include "common.hpp"

#include <iostream>
#include <map>

#include "sciwealth/country.hpp"
#include "sciwealth/errors.hpp"
#include "sciwealth/io.hpp"

namespace sciwealth::cli {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::io_error, "cannot open '" + path + "' for reading");
  }
  return in;
}

void with_output(const std::string& path, const std::function<void(std::ostream&)>& write) {
  if (path == "-" || path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw Error(Errc::io_error, "cannot open '" + path + "' for writing");
  }
  write(out);
  if (!out) {
    throw Error(Errc::io_error, "error while writing '" + path + "'");
  }
}

csv::Dialect resolve_dialect(const std::string& format, const std::string& path) {
  if (format == "tsv") return csv::Dialect::tsv;
  if (format == "csv") return csv::Dialect::csv;
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return csv::Dialect::csv;
  return csv::Dialect::tsv;
}

Precision resolve_precision(const std::string& name) {
  return name == "display" ? Precision::display : Precision::full;
}

std::set<std::string> parse_code_set(const std::string& csv_list) {
  std::set<std::string> codes;
  std::size_t start = 0;
  while (start <= csv_list.size()) {
    std::size_t comma = csv_list.find(',', start);
    std::string token = csv_list.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t begin = token.find_first_not_of(" \t");
    if (begin != std::string::npos) {
      std::size_t end = token.find_last_not_of(" \t");
      codes.insert(to_upper_ascii(token.substr(begin, end - begin + 1)));
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return codes;
}

std::string slugify(const std::string& text) {
  std::string slug;
  for (char c : text) {
    if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
      slug += c;
    } else if (c >= 'A' && c <= 'Z') {
      slug += static_cast<char>(c - 'A' + 'a');
    } else if (!slug.empty() && slug.back() != '-') {
      slug += '-';
    }
  }
  while (!slug.empty() && slug.back() == '-') slug.pop_back();
  return slug;
}

std::vector<CountryRow> load_joined_rows(const std::string& indicators_path,
                                         const std::string& gdp_path,
                                         const std::string& cohorts_path,
                                         std::vector<Cohort>* cohorts_out) {
  auto indicators_in = open_input(indicators_path);
  const std::vector<CountryIndicators> indicators = read_indicators_csv(indicators_in);

  std::vector<GdpEntry> gdp;
  if (!gdp_path.empty()) {
    auto gdp_in = open_input(gdp_path);
    gdp = load_gdp(gdp_in);
  }
  JoinResult joined = join_gdp(indicators, gdp);
  if (!joined.missing_gdp.empty()) {
    std::cerr << "warning: no GDP entry for";
    for (const auto& code : joined.missing_gdp) std::cerr << ' ' << code;
    std::cerr << '\n';
  }

  if (cohorts_path.empty()) {
    if (cohorts_out) cohorts_out->clear();
    return std::move(joined.rows);
  }

  auto cohorts_in = open_input(cohorts_path);
  std::vector<Cohort> cohorts = load_cohorts(cohorts_in);
  tag_memberships(joined.rows, cohorts);

  std::map<std::string, const CountryRow*> by_country;
  for (const auto& row : joined.rows) by_country.emplace(row.indicators.country, &row);

  std::vector<CountryRow> selected;
  std::vector<std::string> missing;
  for (const auto& code : cohort_union(cohorts)) {
    if (auto it = by_country.find(code); it != by_country.end()) {
      selected.push_back(*it->second);
    } else {
      missing.push_back(code);
    }
  }
  if (!missing.empty()) {
    std::cerr << "warning: cohort members without indicator rows:";
    for (const auto& code : missing) std::cerr << ' ' << code;
    std::cerr << '\n';
  }
  if (cohorts_out) *cohorts_out = std::move(cohorts);
  return selected;
}

}  // namespace sciwealth::cli
