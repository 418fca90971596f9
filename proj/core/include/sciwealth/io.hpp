#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "sciwealth/format.hpp"
#include "sciwealth/indicators.hpp"
#include "sciwealth/ingest.hpp"
#include "sciwealth/stats.hpp"

namespace sciwealth {

/// Indicator table: header country,N,C,i,X,E,S,eta. Full precision
/// writes round-trippable doubles; display applies report rounding
/// (i two decimals, eta three, X/E/S scientific to three significant
/// figures).
void write_indicators_csv(std::ostream& out, std::span<const CountryIndicators> rows,
                          Precision precision);
void write_indicators_json(std::ostream& out, std::span<const CountryIndicators> rows);

/// Reads the table back; only full-precision files reproduce the
/// original doubles exactly.
std::vector<CountryIndicators> read_indicators_csv(std::istream& in);

void write_institutions_json(std::ostream& out, std::span<const InstitutionRecord> records);

/// One line of the report table: an indicator row plus its
/// percentage-of-world columns (absent for intensive indicators).
struct ReportRow {
  CountryIndicators indicators;
  std::optional<double> share_institutions;
  std::optional<double> share_citations;
  std::optional<double> share_exergy;
  std::optional<double> share_energy;
};

void write_report_csv(std::ostream& out, std::span<const ReportRow> rows, Precision precision);
void write_report_json(std::ostream& out, std::span<const ReportRow> rows);

/// Label column plus one column per variable; display mode rounds to
/// two decimals.
void write_correlation_csv(std::ostream& out, const CorrelationMatrix& matrix,
                           Precision precision);
void write_correlation_json(std::ostream& out, const CorrelationMatrix& matrix);

/// Sectioned CSV: a '# points' block with one row per country followed
/// by a '# line slope=<s>' block of two endpoints per reference line.
void write_scatter_csv(std::ostream& out, const ScatterSeries& series, Precision precision);
void write_scatter_json(std::ostream& out, const ScatterSeries& series);

}  // namespace sciwealth
