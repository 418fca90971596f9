#include "sciwealth/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "sciwealth/errors.hpp"

namespace sciwealth {

namespace {

// Rounding slack for the exergy <= energy (Cauchy-Schwarz) bound.
constexpr double kRelTol = 1e-12;

}  // namespace

GroupAggregate aggregate(std::span<const InstitutionRecord> records) {
  if (records.empty()) {
    throw Error(Errc::empty_group, "cannot aggregate an empty group");
  }
  GroupAggregate agg;
  agg.institutions = static_cast<std::int64_t>(records.size());
  agg.citation_list.reserve(records.size());
  for (const auto& record : records) {
    agg.citations += record.citations;
    agg.citation_list.push_back(record.citations);
  }
  std::sort(agg.citation_list.begin(), agg.citation_list.end(), std::greater<>());
  return agg;
}

double impact(std::int64_t citations, std::int64_t institutions) {
  if (institutions < 1) {
    throw Error(Errc::zero_institutions, "impact needs at least one institution");
  }
  return static_cast<double>(citations) / static_cast<double>(institutions);
}

double exergy(std::int64_t citations, std::int64_t institutions) {
  if (institutions < 1) {
    throw Error(Errc::zero_institutions, "exergy needs at least one institution");
  }
  const double c = static_cast<double>(citations);
  return c * c / static_cast<double>(institutions);
}

double energy(std::span<const std::int64_t> citation_list) {
  if (citation_list.empty()) {
    throw Error(Errc::empty_group, "energy needs at least one citation count");
  }
  // Fixed descending summation order keeps the result reproducible no
  // matter how the caller ordered the list.
  std::vector<std::int64_t> sorted(citation_list.begin(), citation_list.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double sum = 0.0;
  for (std::int64_t c : sorted) {
    const double value = static_cast<double>(c);
    sum += value * value;
  }
  return sum;
}

double eta(double exergy_value, double energy_value) {
  if (!(energy_value > 0.0)) {
    throw Error(Errc::non_positive_energy, "eta needs positive energy");
  }
  if (exergy_value > energy_value * (1.0 + kRelTol)) {
    throw Error(Errc::negative_entropy,
                "exergy exceeds energy beyond tolerance; inputs are inconsistent");
  }
  return std::min(exergy_value / energy_value, 1.0);
}

double entropy(double energy_value, double exergy_value) {
  if (exergy_value > energy_value * (1.0 + kRelTol)) {
    throw Error(Errc::negative_entropy,
                "exergy exceeds energy beyond tolerance; inputs are inconsistent");
  }
  return std::max(energy_value - exergy_value, 0.0);
}

CountryIndicators group_indicators(std::string label, std::span<const InstitutionRecord> records) {
  const GroupAggregate agg = aggregate(records);
  CountryIndicators out;
  out.country = std::move(label);
  out.institutions = agg.institutions;
  out.citations = agg.citations;
  out.impact = impact(agg.citations, agg.institutions);
  out.exergy = exergy(agg.citations, agg.institutions);
  out.energy = energy(agg.citation_list);
  if (agg.institutions == 1) {
    // Single institution: exergy and energy are both c^2, eta defaults to 1.
    out.eta = 1.0;
    out.entropy = 0.0;
  } else {
    out.eta = eta(out.exergy, out.energy);
    out.entropy = entropy(out.energy, out.exergy);
  }
  return out;
}

std::vector<CountryIndicators> country_indicators(std::span<const InstitutionRecord> records) {
  std::map<std::string, std::vector<InstitutionRecord>> groups;
  for (const auto& record : records) {
    groups[record.country].push_back(record);
  }
  std::vector<CountryIndicators> rows;
  rows.reserve(groups.size());
  for (const auto& [country, group] : groups) {
    rows.push_back(group_indicators(country, group));
  }
  std::sort(rows.begin(), rows.end(), [](const CountryIndicators& a, const CountryIndicators& b) {
    if (a.citations != b.citations) return a.citations > b.citations;
    return a.country < b.country;
  });
  return rows;
}

CountryIndicators world_indicators(std::span<const InstitutionRecord> records) {
  return group_indicators(kWorldLabel, records);
}

double share_of_world(double country_value, double world_value) {
  if (!(world_value > 0.0)) {
    throw Error(Errc::zero_world_value, "world value must be positive");
  }
  return 100.0 * country_value / world_value;
}

}  // namespace sciwealth
