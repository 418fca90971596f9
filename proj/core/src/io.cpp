#include "sciwealth/io.hpp"

#include <charconv>
#include <cstdlib>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "sciwealth/csv.hpp"
#include "sciwealth/errors.hpp"

namespace sciwealth {

namespace {

std::string fmt(double value, Precision precision) {
  return precision == Precision::full ? format_double(value) : format_sci3(value);
}

std::int64_t parse_int_field(const std::string& raw, const char* what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
  if (ec != std::errc{} || ptr != raw.data() + raw.size()) {
    throw Error(Errc::malformed_row, std::string(what) + " '" + raw + "' is not an integer");
  }
  return value;
}

double parse_double_field(const std::string& raw, const char* what) {
  char* end = nullptr;
  double value = std::strtod(raw.c_str(), &end);
  if (raw.empty() || end != raw.c_str() + raw.size()) {
    throw Error(Errc::malformed_row, std::string(what) + " '" + raw + "' is not a number");
  }
  return value;
}

nlohmann::ordered_json indicators_to_json(const CountryIndicators& row) {
  return {
      {"country", row.country}, {"N", row.institutions}, {"C", row.citations},
      {"i", row.impact},        {"X", row.exergy},       {"E", row.energy},
      {"S", row.entropy},       {"eta", row.eta},
  };
}

}  // namespace

void write_indicators_csv(std::ostream& out, std::span<const CountryIndicators> rows,
                          Precision precision) {
  csv::write_row(out, {"country", "N", "C", "i", "X", "E", "S", "eta"}, csv::Dialect::csv);
  for (const auto& row : rows) {
    std::string impact_text, eta_text;
    if (precision == Precision::full) {
      impact_text = format_double(row.impact);
      eta_text = format_double(row.eta);
    } else {
      impact_text = format_fixed(row.impact, 2);
      eta_text = format_fixed(row.eta, 3);
    }
    csv::write_row(out,
                   {row.country, format_int(row.institutions), format_int(row.citations),
                    impact_text, fmt(row.exergy, precision), fmt(row.energy, precision),
                    fmt(row.entropy, precision), eta_text},
                   csv::Dialect::csv);
  }
}

void write_indicators_json(std::ostream& out, std::span<const CountryIndicators> rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& row : rows) doc.push_back(indicators_to_json(row));
  out << doc.dump(2) << '\n';
}

std::vector<CountryIndicators> read_indicators_csv(std::istream& in) {
  auto header = csv::read_row(in, csv::Dialect::csv);
  const std::vector<std::string> expected = {"country", "N", "C", "i", "X", "E", "S", "eta"};
  if (!header) {
    throw Error(Errc::empty_input, "indicator table has no header row");
  }
  if (*header != expected) {
    throw Error(Errc::missing_column,
                "indicator table header must be country,N,C,i,X,E,S,eta");
  }
  std::vector<CountryIndicators> rows;
  while (auto row = csv::read_row(in, csv::Dialect::csv)) {
    if (row->size() != expected.size()) {
      throw Error(Errc::malformed_row, "indicator row has wrong field count");
    }
    CountryIndicators ind;
    ind.country = (*row)[0];
    ind.institutions = parse_int_field((*row)[1], "N");
    ind.citations = parse_int_field((*row)[2], "C");
    ind.impact = parse_double_field((*row)[3], "i");
    ind.exergy = parse_double_field((*row)[4], "X");
    ind.energy = parse_double_field((*row)[5], "E");
    ind.entropy = parse_double_field((*row)[6], "S");
    ind.eta = parse_double_field((*row)[7], "eta");
    rows.push_back(std::move(ind));
  }
  if (rows.empty()) {
    throw Error(Errc::empty_input, "indicator table has no data rows");
  }
  return rows;
}

void write_institutions_json(std::ostream& out, std::span<const InstitutionRecord> records) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& record : records) {
    doc.push_back({{"rank", record.rank},
                   {"institution", record.name},
                   {"country", record.country},
                   {"citations", record.citations}});
  }
  out << doc.dump(2) << '\n';
}

void write_report_csv(std::ostream& out, std::span<const ReportRow> rows, Precision precision) {
  csv::write_row(out,
                 {"country", "N", "C", "i", "X", "E", "S", "eta", "share_N", "share_C", "share_X",
                  "share_E"},
                 csv::Dialect::csv);
  auto share = [&](const std::optional<double>& value) -> std::string {
    if (!value) return "";
    return precision == Precision::full ? format_double(*value) : format_fixed(*value, 1);
  };
  for (const auto& row : rows) {
    const auto& ind = row.indicators;
    std::string impact_text, eta_text;
    if (precision == Precision::full) {
      impact_text = format_double(ind.impact);
      eta_text = format_double(ind.eta);
    } else {
      impact_text = format_fixed(ind.impact, 2);
      eta_text = format_fixed(ind.eta, 3);
    }
    csv::write_row(out,
                   {ind.country, format_int(ind.institutions), format_int(ind.citations),
                    impact_text, fmt(ind.exergy, precision), fmt(ind.energy, precision),
                    fmt(ind.entropy, precision), eta_text, share(row.share_institutions),
                    share(row.share_citations), share(row.share_exergy), share(row.share_energy)},
                   csv::Dialect::csv);
  }
}

void write_report_json(std::ostream& out, std::span<const ReportRow> rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json entry = indicators_to_json(row.indicators);
    auto put = [&](const char* key, const std::optional<double>& value) {
      if (value) entry[key] = *value;
    };
    put("share_N", row.share_institutions);
    put("share_C", row.share_citations);
    put("share_X", row.share_exergy);
    put("share_E", row.share_energy);
    doc.push_back(std::move(entry));
  }
  out << doc.dump(2) << '\n';
}

void write_correlation_csv(std::ostream& out, const CorrelationMatrix& matrix,
                           Precision precision) {
  std::vector<std::string> header = {"variable"};
  header.insert(header.end(), matrix.labels.begin(), matrix.labels.end());
  csv::write_row(out, header, csv::Dialect::csv);
  for (std::size_t i = 0; i < matrix.labels.size(); ++i) {
    std::vector<std::string> fields = {matrix.labels[i]};
    for (std::size_t j = 0; j < matrix.labels.size(); ++j) {
      fields.push_back(precision == Precision::full ? format_double(matrix.values[i][j])
                                                    : format_fixed(matrix.values[i][j], 2));
    }
    csv::write_row(out, fields, csv::Dialect::csv);
  }
}

void write_correlation_json(std::ostream& out, const CorrelationMatrix& matrix) {
  nlohmann::ordered_json doc;
  doc["labels"] = matrix.labels;
  doc["values"] = matrix.values;
  doc["rows_used"] = matrix.rows_used;
  doc["rows_dropped"] = matrix.rows_dropped;
  out << doc.dump(2) << '\n';
}

namespace {

std::string scatter_value(double value, Precision precision) {
  if (precision == Precision::full) return format_double(value);
  char buf[64];
  int n = std::snprintf(buf, sizeof(buf), "%.6g", value);
  return std::string(buf, static_cast<std::size_t>(n));
}

}  // namespace

void write_scatter_csv(std::ostream& out, const ScatterSeries& series, Precision precision) {
  out << "# scatter x=" << series.x_label << " y=" << series.y_label
      << " log10=" << (series.log_space ? 1 : 0) << '\n';
  out << "# points\n";
  csv::write_row(out, {"country", "x", "y"}, csv::Dialect::csv);
  for (const auto& point : series.points) {
    csv::write_row(out,
                   {point.country, scatter_value(point.x, precision),
                    scatter_value(point.y, precision)},
                   csv::Dialect::csv);
  }
  for (const auto& line : series.reference_lines) {
    out << "# line slope=" << format_double(line.slope) << '\n';
    csv::write_row(out, {"x", "y"}, csv::Dialect::csv);
    csv::write_row(out, {scatter_value(line.x0, precision), scatter_value(line.y0, precision)},
                   csv::Dialect::csv);
    csv::write_row(out, {scatter_value(line.x1, precision), scatter_value(line.y1, precision)},
                   csv::Dialect::csv);
  }
}

void write_scatter_json(std::ostream& out, const ScatterSeries& series) {
  nlohmann::ordered_json doc;
  doc["x_label"] = series.x_label;
  doc["y_label"] = series.y_label;
  doc["log10"] = series.log_space;
  doc["points"] = nlohmann::ordered_json::array();
  for (const auto& point : series.points) {
    doc["points"].push_back({{"country", point.country}, {"x", point.x}, {"y", point.y}});
  }
  doc["lines"] = nlohmann::ordered_json::array();
  for (const auto& line : series.reference_lines) {
    doc["lines"].push_back({{"slope", line.slope},
                            {"x0", line.x0},
                            {"y0", line.y0},
                            {"x1", line.x1},
                            {"y1", line.y1}});
  }
  out << doc.dump(2) << '\n';
}

}  // namespace sciwealth
