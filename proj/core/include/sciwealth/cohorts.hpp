#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sciwealth/indicators.hpp"

namespace sciwealth {

/// Named set of countries. Distinct cohorts may overlap.
struct Cohort {
  std::string name;
  std::vector<std::string> members;  // alpha-2 codes, config order, no duplicates
};

struct GdpEntry {
  std::string country;
  double gdp_busd = 0.0;  // nominal GDP, billions of USD, > 0
};

/// Indicator row decorated with GDP and cohort memberships.
struct CountryRow {
  CountryIndicators indicators;
  std::optional<double> gdp_busd;
  std::vector<std::string> cohorts;  // names of cohorts containing this country
};

/// Loads a JSON object {cohort name: [country codes]}. Cohorts keep file
/// order, codes are uppercased and checked against the assigned ISO
/// 3166-1 alpha-2 set. Malformed JSON, unknown codes, duplicate members
/// and empty cohorts all throw.
std::vector<Cohort> load_cohorts(std::istream& config);

/// Loads a CSV with columns country, gdp_busd. A repeated country code
/// throws Error(duplicate_gdp_entry); a GDP value <= 0 is malformed.
std::vector<GdpEntry> load_gdp(std::istream& input);

struct JoinResult {
  std::vector<CountryRow> rows;          // same order as the input indicators
  std::vector<std::string> missing_gdp;  // countries with no GDP entry
};

/// Left join of GDP data onto indicator rows; never drops or reorders
/// rows. Unmatched countries carry an empty gdp_busd and are listed in
/// missing_gdp.
JoinResult join_gdp(std::span<const CountryIndicators> rows, std::span<const GdpEntry> gdp);

struct CohortSelection {
  std::vector<CountryRow> rows;             // cohort member order
  std::vector<std::string> missing_members; // members absent from the input rows
};

/// Picks the rows belonging to a cohort, in cohort member order.
CohortSelection select_cohort(std::span<const CountryRow> rows, const Cohort& cohort);

/// Fills each row's cohort membership list (cohort config order).
void tag_memberships(std::span<CountryRow> rows, std::span<const Cohort> cohorts);

/// Union of all cohort members in first-appearance order.
std::vector<std::string> cohort_union(std::span<const Cohort> cohorts);

}  // namespace sciwealth
