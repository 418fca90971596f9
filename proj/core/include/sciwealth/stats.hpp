#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sciwealth/cohorts.hpp"

namespace sciwealth {

/// Variables a correlation or scatter request can name.
enum class Variable { institutions, citations, impact, exergy, energy, entropy, eta, gdp };

/// Parses "N", "C", "i", "X", "E", "S", "eta" or "GDP" (case-insensitive,
/// "η" also accepted). Throws Error(unknown_variable) otherwise.
Variable parse_variable(std::string_view name);

/// Canonical label: N, C, i, X, E, S, eta, GDP.
std::string_view variable_label(Variable v) noexcept;

/// Value of a variable on one row; empty when GDP is missing.
std::optional<double> variable_value(const CountryRow& row, Variable v);

/// Product-moment correlation of two equal-length vectors (>= 3 points,
/// neither constant), clamped to [-1, 1].
double pearson(std::span<const double> xs, std::span<const double> ys);

struct CorrelationMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> values;  // symmetric, unit diagonal
  int rows_used = 0;
  int rows_dropped = 0;  // listwise deletion of rows missing any variable

  double at(std::size_t i, std::size_t j) const { return values[i][j]; }
};

/// Pairwise Pearson over the rows that have every requested variable
/// (one consistent row set for all pairs). Raw values by default;
/// log10_transform correlates base-10 logs instead and requires every
/// selected value to be positive.
CorrelationMatrix correlation_matrix(std::span<const CountryRow> rows,
                                     std::span<const Variable> variables,
                                     bool log10_transform = false);

struct ScatterPoint {
  std::string country;
  double x = 0.0;
  double y = 0.0;
};

struct ReferenceLine {
  double slope = 0.0;
  // Endpoints spanning the x-range of the point cloud.
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
};

struct ScatterSeries {
  std::string x_label;
  std::string y_label;
  bool log_space = false;  // stored coordinates are base-10 logs
  std::vector<ScatterPoint> points;
  std::vector<ReferenceLine> reference_lines;
};

/// Builds a plot-ready dataset: one point per complete row (base-10 logs
/// when log_space) and, for each requested slope, a reference line with
/// that slope through the centroid of the point cloud.
ScatterSeries scatter_dataset(std::span<const CountryRow> rows, Variable x_var, Variable y_var,
                              bool log_space, std::span<const double> slopes);

/// Ordinary-least-squares slope of log10(y) on log10(x) over complete
/// rows; both variables must be strictly positive.
double loglog_slope(std::span<const CountryRow> rows, Variable x_var, Variable y_var);

/// OLS slope of ys on xs (xs must not be constant).
double ols_slope(std::span<const double> xs, std::span<const double> ys);

}  // namespace sciwealth
