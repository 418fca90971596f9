#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "sciwealth/csv.hpp"

namespace sciwealth {

/// One ranked institution from a citation-ranking export.
struct InstitutionRecord {
  int rank = 0;                // position in the source file
  std::string name;            // nonempty after trimming
  std::string country;         // ISO 3166-1 alpha-2, uppercase
  std::int64_t citations = 0;  // total citations, >= 0

  bool operator==(const InstitutionRecord&) const = default;
};

struct IngestConfig {
  std::int64_t threshold = 1000;
  std::set<std::string> excluded_countries = {"CN", "RU"};
  bool strict = true;

  /// Throws Error(bad_config) on a negative threshold or an exclusion
  /// entry that is not a two-letter code.
  void validate() const;
};

struct ParseResult {
  std::vector<InstitutionRecord> records;
  std::vector<std::string> warnings;  // skipped rows in lenient mode
};

/// Parses a ranking export with a header row naming at least
/// rank, institution, country and citations (case-insensitive, extra
/// columns ignored). Citation values may carry thousands separators
/// (comma or U+2009 thin space). Malformed rows throw in strict mode
/// and are skipped with a warning otherwise.
ParseResult parse_ranking(std::istream& input, csv::Dialect format, bool strict = true);

/// Writes records in the canonical column order
/// (rank, institution, country, citations); parse_ranking reads the
/// result back unchanged.
void write_ranking(std::ostream& out, std::span<const InstitutionRecord> records,
                   csv::Dialect format);

/// Keeps records with citations strictly greater than threshold.
std::vector<InstitutionRecord> filter_threshold(std::span<const InstitutionRecord> records,
                                                std::int64_t threshold);

/// Drops records whose country is in codes.
std::vector<InstitutionRecord> exclude_countries(std::span<const InstitutionRecord> records,
                                                 const std::set<std::string>& codes);

struct DuplicateGroup {
  std::string name;
  std::string country;
  int count = 0;  // occurrences, >= 2
};

struct ValidationReport {
  std::vector<DuplicateGroup> duplicates;           // repeated (name, country) pairs
  std::vector<InstitutionRecord> zero_citation;     // records with citations == 0
  std::map<std::string, int> per_country_counts;

  bool clean() const { return duplicates.empty() && zero_citation.empty(); }
  std::string summary() const;
};

/// Reports duplicate (name, country) pairs, zero-citation records and
/// per-country counts. Never mutates or drops anything.
ValidationReport validate(std::span<const InstitutionRecord> records);

enum class DedupPolicy { keep_first, sum, fail };

/// Resolves duplicate (name, country) pairs. keep_first keeps the first
/// occurrence, sum folds citation counts into it, fail throws
/// Error(duplicate_record) if any pair repeats.
std::vector<InstitutionRecord> deduplicate(std::span<const InstitutionRecord> records,
                                           DedupPolicy policy);

}  // namespace sciwealth
