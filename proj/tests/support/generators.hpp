#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sciwealth/cohorts.hpp"
#include "sciwealth/indicators.hpp"
#include "sciwealth/ingest.hpp"

namespace testsupport {

inline std::int64_t rand_in(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline double rand_unit(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

// Random nonempty citation list; guaranteed at least one positive count.
inline std::vector<std::int64_t> random_citations(std::mt19937_64& rng, int max_size = 20,
                                                  std::int64_t max_value = 1000000) {
  const auto size = rand_in(rng, 1, max_size);
  std::vector<std::int64_t> citations(static_cast<std::size_t>(size));
  for (auto& c : citations) c = rand_in(rng, 0, max_value);
  citations[static_cast<std::size_t>(rand_in(rng, 0, size - 1))] = rand_in(rng, 1, max_value);
  return citations;
}

inline std::vector<sciwealth::InstitutionRecord> records_from(
    const std::vector<std::int64_t>& citations, const std::string& country = "US") {
  std::vector<sciwealth::InstitutionRecord> records;
  for (std::size_t i = 0; i < citations.size(); ++i) {
    records.push_back({static_cast<int>(i + 1), "Institution " + std::to_string(i + 1), country,
                       citations[i]});
  }
  return records;
}

// Indicator rows with GDP attached, for correlation/scatter tests.
inline std::vector<sciwealth::CountryRow> random_country_rows(std::mt19937_64& rng, int count) {
  static const char* codes[] = {"US", "GB", "DE", "FR", "JP", "CA", "IT", "ES", "BR", "IN",
                                "KR", "PT", "MX", "TR", "AR", "CL", "EG", "SA", "MY", "ID"};
  std::vector<sciwealth::CountryRow> rows;
  for (int k = 0; k < count; ++k) {
    const auto citations = random_citations(rng, 15, 500000);
    sciwealth::CountryRow row;
    row.indicators = sciwealth::group_indicators(codes[k % 20], records_from(citations));
    row.gdp_busd = 5.0 + 20000.0 * rand_unit(rng);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace testsupport
