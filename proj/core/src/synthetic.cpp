#include "sciwealth/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "sciwealth/country.hpp"

namespace sciwealth {

namespace {

struct CountryProfile {
  const char* code;
  int institutions;
};

// Roster mixing large and small science systems, the default exclusion
// targets (CN, RU) and a single-institution country. Codes overlap the
// shipped cohort and GDP tables so the whole pipeline runs on this data.
constexpr CountryProfile kRoster[] = {
    {"US", 85}, {"CN", 60}, {"GB", 55}, {"DE", 45}, {"RU", 40}, {"JP", 40}, {"FR", 38},
    {"CA", 35}, {"IT", 33}, {"BR", 32}, {"ES", 30}, {"IN", 30}, {"KR", 28}, {"TR", 22},
    {"MX", 18}, {"IR", 18}, {"PT", 14}, {"MY", 14}, {"AR", 14}, {"EG", 13}, {"SA", 12},
    {"PK", 12}, {"ID", 11}, {"CL", 11}, {"CO", 10}, {"PE", 7},  {"AE", 6},  {"TN", 6},
    {"JO", 5},  {"QA", 3},  {"UY", 3},  {"EE", 1},
};

// Uniform in (0, 1), mapped straight from the engine's 64-bit output.
double next_uniform(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

std::int64_t pareto_citations(std::mt19937_64& rng, double alpha) {
  constexpr double kMinCitations = 250.0;
  constexpr double kMaxCitations = 2.0e7;
  const double u = next_uniform(rng);
  const double value = kMinCitations * std::pow(u, -1.0 / alpha);
  return static_cast<std::int64_t>(std::min(value, kMaxCitations));
}

}  // namespace

std::vector<InstitutionRecord> synthetic_ranking(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<InstitutionRecord> records;
  for (const auto& profile : kRoster) {
    // Larger systems get heavier tails, so citation wealth concentrates
    // more in their top institutions.
    const double alpha = std::max(1.8 - 0.013 * profile.institutions, 0.6);
    const auto name = country_name(profile.code).value_or(profile.code);
    for (int k = 1; k <= profile.institutions; ++k) {
      InstitutionRecord record;
      record.name = "University of " + std::string(name) + " " + std::to_string(k);
      record.country = profile.code;
      record.citations = pareto_citations(rng, alpha);
      records.push_back(std::move(record));
    }
  }
  std::sort(records.begin(), records.end(), [](const InstitutionRecord& a, const InstitutionRecord& b) {
    if (a.citations != b.citations) return a.citations > b.citations;
    return a.name < b.name;
  });
  for (std::size_t i = 0; i < records.size(); ++i) {
    records[i].rank = static_cast<int>(i + 1);
  }
  return records;
}

}  // namespace sciwealth
