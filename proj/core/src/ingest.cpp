#include "sciwealth/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "sciwealth/country.hpp"
#include "sciwealth/errors.hpp"

namespace sciwealth {

namespace {

constexpr std::string_view kThinSpace = "\xE2\x80\x89";  // U+2009

std::string trim(std::string_view text) {
  std::size_t begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  std::size_t end = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(begin, end - begin + 1));
}

std::string lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

// Integer with optional thousands separators (comma or thin space).
std::optional<std::int64_t> parse_count(std::string_view raw) {
  std::string digits;
  digits.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size();) {
    if (raw[i] == ',') {
      ++i;
      continue;
    }
    if (raw.substr(i, kThinSpace.size()) == kThinSpace) {
      i += kThinSpace.size();
      continue;
    }
    digits += raw[i];
    ++i;
  }
  if (digits.empty()) return std::nullopt;
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  return value;
}

struct HeaderIndex {
  std::size_t rank, institution, country, citations;
};

HeaderIndex locate_columns(const std::vector<std::string>& header) {
  std::map<std::string, std::size_t> by_name;
  for (std::size_t i = 0; i < header.size(); ++i) {
    std::string name = lower(trim(header[i]));
    if (i == 0 && name.size() >= 3 && name.substr(0, 3) == "\xEF\xBB\xBF") {
      name = name.substr(3);  // UTF-8 BOM
    }
    by_name.emplace(std::move(name), i);
  }
  auto require = [&](const char* name) -> std::size_t {
    auto it = by_name.find(name);
    if (it == by_name.end()) {
      throw Error(Errc::missing_column, std::string("missing required column '") + name + "'");
    }
    return it->second;
  };
  return {require("rank"), require("institution"), require("country"), require("citations")};
}

}  // namespace

void IngestConfig::validate() const {
  if (threshold < 0) {
    throw Error(Errc::bad_config, "threshold must be nonnegative");
  }
  for (const auto& code : excluded_countries) {
    if (!is_country_code_shape(code)) {
      throw Error(Errc::bad_config, "excluded country '" + code + "' is not a two-letter code");
    }
  }
}

ParseResult parse_ranking(std::istream& input, csv::Dialect format, bool strict) {
  auto header = csv::read_row(input, format);
  if (!header) {
    throw Error(Errc::empty_input, "input has no header row");
  }
  const HeaderIndex columns = locate_columns(*header);
  const std::size_t width =
      std::max({columns.rank, columns.institution, columns.country, columns.citations}) + 1;

  ParseResult result;
  int line_no = 1;  // header was line 1 of the logical stream
  while (auto row = csv::read_row(input, format)) {
    ++line_no;
    auto fail = [&](const std::string& why) {
      std::ostringstream msg;
      msg << "row " << line_no << ": " << why;
      if (strict) throw Error(Errc::malformed_row, msg.str());
      result.warnings.push_back(msg.str() + " (skipped)");
    };

    if (row->size() < width) {
      fail("expected at least " + std::to_string(width) + " fields, got " +
           std::to_string(row->size()));
      continue;
    }
    InstitutionRecord record;
    auto rank = parse_count(trim((*row)[columns.rank]));
    if (!rank || *rank <= 0) {
      fail("rank '" + (*row)[columns.rank] + "' is not a positive integer");
      continue;
    }
    record.rank = static_cast<int>(*rank);
    record.name = trim((*row)[columns.institution]);
    if (record.name.empty()) {
      fail("empty institution name");
      continue;
    }
    record.country = to_upper_ascii(trim((*row)[columns.country]));
    if (!is_country_code_shape(record.country)) {
      fail("country '" + (*row)[columns.country] + "' is not a two-letter code");
      continue;
    }
    auto citations = parse_count(trim((*row)[columns.citations]));
    if (!citations || *citations < 0) {
      fail("citations '" + (*row)[columns.citations] + "' is not a nonnegative integer");
      continue;
    }
    record.citations = *citations;
    result.records.push_back(std::move(record));
  }

  if (result.records.empty() && result.warnings.empty()) {
    throw Error(Errc::empty_input, "input has no data rows");
  }
  return result;
}

void write_ranking(std::ostream& out, std::span<const InstitutionRecord> records,
                   csv::Dialect format) {
  csv::write_row(out, {"rank", "institution", "country", "citations"}, format);
  for (const auto& record : records) {
    csv::write_row(out,
                   {std::to_string(record.rank), record.name, record.country,
                    std::to_string(record.citations)},
                   format);
  }
}

std::vector<InstitutionRecord> filter_threshold(std::span<const InstitutionRecord> records,
                                                std::int64_t threshold) {
  if (threshold < 0) {
    throw Error(Errc::bad_config, "threshold must be nonnegative");
  }
  std::vector<InstitutionRecord> kept;
  kept.reserve(records.size());
  for (const auto& record : records) {
    if (record.citations > threshold) kept.push_back(record);
  }
  return kept;
}

std::vector<InstitutionRecord> exclude_countries(std::span<const InstitutionRecord> records,
                                                 const std::set<std::string>& codes) {
  std::vector<InstitutionRecord> kept;
  kept.reserve(records.size());
  for (const auto& record : records) {
    if (!codes.contains(record.country)) kept.push_back(record);
  }
  return kept;
}

ValidationReport validate(std::span<const InstitutionRecord> records) {
  ValidationReport report;
  std::map<std::pair<std::string, std::string>, int> seen;
  for (const auto& record : records) {
    ++seen[{record.name, record.country}];
    ++report.per_country_counts[record.country];
    if (record.citations == 0) report.zero_citation.push_back(record);
  }
  for (const auto& [key, count] : seen) {
    if (count > 1) report.duplicates.push_back({key.first, key.second, count});
  }
  return report;
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  std::int64_t total = 0;
  for (const auto& [code, count] : per_country_counts) total += count;
  out << total << " records across " << per_country_counts.size() << " countries\n";
  if (duplicates.empty() && zero_citation.empty()) {
    out << "no anomalies\n";
    return out.str();
  }
  for (const auto& dup : duplicates) {
    out << "duplicate: '" << dup.name << "' (" << dup.country << ") appears " << dup.count
        << " times\n";
  }
  for (const auto& record : zero_citation) {
    out << "zero citations: '" << record.name << "' (" << record.country << ", rank "
        << record.rank << ")\n";
  }
  return out.str();
}

std::vector<InstitutionRecord> deduplicate(std::span<const InstitutionRecord> records,
                                           DedupPolicy policy) {
  std::vector<InstitutionRecord> out;
  out.reserve(records.size());
  std::map<std::pair<std::string, std::string>, std::size_t> first_index;
  for (const auto& record : records) {
    auto key = std::make_pair(record.name, record.country);
    auto it = first_index.find(key);
    if (it == first_index.end()) {
      first_index.emplace(std::move(key), out.size());
      out.push_back(record);
      continue;
    }
    switch (policy) {
      case DedupPolicy::keep_first:
        break;
      case DedupPolicy::sum:
        out[it->second].citations += record.citations;
        break;
      case DedupPolicy::fail:
        throw Error(Errc::duplicate_record,
                    "duplicate record '" + record.name + "' (" + record.country + ")");
    }
  }
  return out;
}

}  // namespace sciwealth
