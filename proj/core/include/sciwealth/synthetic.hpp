#pragma once

#include <cstdint>
#include <vector>

#include "sciwealth/ingest.hpp"

namespace sciwealth {

/// Deterministic synthetic ranking: a fixed roster of countries, each
/// with a power-law citation profile whose concentration grows with the
/// country's size. Records come back ranked by descending citations.
/// Identical seeds always produce identical records (uniform draws are
/// mapped straight from mt19937_64 output, not through <random>
/// distributions, whose results vary between standard libraries).
std::vector<InstitutionRecord> synthetic_ranking(std::uint64_t seed);

}  // namespace sciwealth
