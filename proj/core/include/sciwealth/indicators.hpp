#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sciwealth/ingest.hpp"

namespace sciwealth {

/// Reserved group label for the pooled global set.
inline constexpr const char* kWorldLabel = "WORLD";

/// The indicator ladder for one group of institutions (a country, a
/// cohort or the world):
///
///   institutions  group size                     (extensive)
///   citations     total citations                (extensive)
///   impact        citations / institutions       (intensive)
///   exergy        citations^2 / institutions     (extensive, 2nd order)
///   energy        sum of squared citation counts (extensive, 2nd order)
///   entropy       energy - exergy                (dispersion term)
///   eta           exergy / energy, in (0, 1]     (intensive)
///
/// eta = 1 means every institution holds the same citation count; small
/// eta means the group's citations concentrate in a few institutions.
struct CountryIndicators {
  std::string country;  // alpha-2 code or kWorldLabel
  std::int64_t institutions = 0;
  std::int64_t citations = 0;
  double impact = 0.0;
  double exergy = 0.0;
  double energy = 0.0;
  double entropy = 0.0;
  double eta = 0.0;
};

struct GroupAggregate {
  std::int64_t institutions = 0;
  std::int64_t citations = 0;
  std::vector<std::int64_t> citation_list;  // sorted descending
};

/// Counts and sums one pre-grouped record set; the returned citation
/// list is sorted descending so downstream sums are order-fixed.
GroupAggregate aggregate(std::span<const InstitutionRecord> records);

/// citations / institutions.
double impact(std::int64_t citations, std::int64_t institutions);

/// citations^2 / institutions.
double exergy(std::int64_t citations, std::int64_t institutions);

/// Sum of squared citation counts, accumulated in descending order of
/// magnitude so the result is bit-stable across runs.
double energy(std::span<const std::int64_t> citation_list);

/// exergy / energy, clamped to at most 1.0. Exactly 1 for a
/// single-institution group.
double eta(double exergy_value, double energy_value);

/// energy - exergy, clamped to 0 when a rounding excursion leaves the
/// difference barely negative; a substantive violation throws.
double entropy(double energy_value, double exergy_value);

/// Full ladder for one labeled group.
CountryIndicators group_indicators(std::string label, std::span<const InstitutionRecord> records);

/// One row per country, sorted by descending citations (country code
/// breaks ties). Countries appear only if they have records.
std::vector<CountryIndicators> country_indicators(std::span<const InstitutionRecord> records);

/// The pooled set of all records, labeled WORLD. Whether exclusions were
/// applied to `records` is the caller's choice.
CountryIndicators world_indicators(std::span<const InstitutionRecord> records);

/// 100 * country_value / world_value.
double share_of_world(double country_value, double world_value);

}  // namespace sciwealth
