#include "sciwealth/cohorts.hpp"

#include <cstdlib>
#include <istream>
#include <map>
#include <set>

#include <json.hpp>

#include "sciwealth/country.hpp"
#include "sciwealth/csv.hpp"
#include "sciwealth/errors.hpp"

namespace sciwealth {

std::vector<Cohort> load_cohorts(std::istream& config) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(config);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::bad_config, std::string("cohort config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw Error(Errc::bad_config, "cohort config must be a JSON object {name: [codes]}");
  }

  std::vector<Cohort> cohorts;
  for (const auto& [name, members] : doc.items()) {
    if (name.empty()) {
      throw Error(Errc::bad_config, "cohort name must be nonempty");
    }
    if (!members.is_array()) {
      throw Error(Errc::bad_config, "cohort '" + name + "' must map to an array of codes");
    }
    Cohort cohort;
    cohort.name = name;
    std::set<std::string> seen;
    for (const auto& entry : members) {
      if (!entry.is_string()) {
        throw Error(Errc::bad_config, "cohort '" + name + "' holds a non-string member");
      }
      std::string code = to_upper_ascii(entry.get<std::string>());
      if (!is_known_country(code)) {
        throw Error(Errc::bad_config,
                    "cohort '" + name + "' lists unknown country code '" + code + "'");
      }
      if (!seen.insert(code).second) {
        throw Error(Errc::bad_config, "cohort '" + name + "' lists '" + code + "' twice");
      }
      cohort.members.push_back(std::move(code));
    }
    if (cohort.members.empty()) {
      throw Error(Errc::empty_cohort, "cohort '" + name + "' has no members");
    }
    cohorts.push_back(std::move(cohort));
  }
  return cohorts;
}

std::vector<GdpEntry> load_gdp(std::istream& input) {
  auto header = csv::read_row(input, csv::Dialect::csv);
  if (!header) {
    throw Error(Errc::empty_input, "GDP table has no header row");
  }
  std::size_t country_col = std::string::npos, gdp_col = std::string::npos;
  for (std::size_t i = 0; i < header->size(); ++i) {
    std::string name = (*header)[i];
    for (char& c : name) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    if (name == "country") country_col = i;
    if (name == "gdp_busd") gdp_col = i;
  }
  if (country_col == std::string::npos) {
    throw Error(Errc::missing_column, "GDP table lacks a 'country' column");
  }
  if (gdp_col == std::string::npos) {
    throw Error(Errc::missing_column, "GDP table lacks a 'gdp_busd' column");
  }

  std::vector<GdpEntry> entries;
  std::set<std::string> seen;
  while (auto row = csv::read_row(input, csv::Dialect::csv)) {
    if (row->size() <= std::max(country_col, gdp_col)) {
      throw Error(Errc::malformed_row, "GDP row has too few fields");
    }
    GdpEntry entry;
    entry.country = to_upper_ascii((*row)[country_col]);
    if (!is_country_code_shape(entry.country)) {
      throw Error(Errc::malformed_row,
                  "GDP country '" + (*row)[country_col] + "' is not a two-letter code");
    }
    const std::string& raw = (*row)[gdp_col];
    char* end = nullptr;
    entry.gdp_busd = std::strtod(raw.c_str(), &end);
    if (end != raw.c_str() + raw.size() || raw.empty()) {
      throw Error(Errc::malformed_row, "GDP value '" + raw + "' is not a number");
    }
    if (!(entry.gdp_busd > 0.0)) {
      throw Error(Errc::malformed_row, "GDP for " + entry.country + " must be positive");
    }
    if (!seen.insert(entry.country).second) {
      throw Error(Errc::duplicate_gdp_entry,
                  "country '" + entry.country + "' appears twice in the GDP table");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

JoinResult join_gdp(std::span<const CountryIndicators> rows, std::span<const GdpEntry> gdp) {
  std::map<std::string, double> by_country;
  for (const auto& entry : gdp) {
    if (!by_country.emplace(entry.country, entry.gdp_busd).second) {
      throw Error(Errc::duplicate_gdp_entry,
                  "country '" + entry.country + "' appears twice in the GDP table");
    }
  }
  JoinResult result;
  result.rows.reserve(rows.size());
  for (const auto& indicators : rows) {
    CountryRow row;
    row.indicators = indicators;
    if (auto it = by_country.find(indicators.country); it != by_country.end()) {
      row.gdp_busd = it->second;
    } else {
      result.missing_gdp.push_back(indicators.country);
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

CohortSelection select_cohort(std::span<const CountryRow> rows, const Cohort& cohort) {
  std::map<std::string, const CountryRow*> by_country;
  for (const auto& row : rows) {
    by_country.emplace(row.indicators.country, &row);
  }
  CohortSelection selection;
  for (const auto& member : cohort.members) {
    if (auto it = by_country.find(member); it != by_country.end()) {
      selection.rows.push_back(*it->second);
    } else {
      selection.missing_members.push_back(member);
    }
  }
  return selection;
}

void tag_memberships(std::span<CountryRow> rows, std::span<const Cohort> cohorts) {
  for (auto& row : rows) {
    row.cohorts.clear();
    for (const auto& cohort : cohorts) {
      for (const auto& member : cohort.members) {
        if (member == row.indicators.country) {
          row.cohorts.push_back(cohort.name);
          break;
        }
      }
    }
  }
}

std::vector<std::string> cohort_union(std::span<const Cohort> cohorts) {
  std::vector<std::string> members;
  std::set<std::string> seen;
  for (const auto& cohort : cohorts) {
    for (const auto& member : cohort.members) {
      if (seen.insert(member).second) members.push_back(member);
    }
  }
  return members;
}

}  // namespace sciwealth
