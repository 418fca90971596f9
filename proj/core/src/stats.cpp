#include "sciwealth/stats.hpp"

#include <algorithm>
#include <cmath>

#include "sciwealth/errors.hpp"

namespace sciwealth {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

struct Moments {
  double mean_x = 0.0, mean_y = 0.0;
  double ss_xx = 0.0, ss_yy = 0.0, ss_xy = 0.0;  // centered sums
};

Moments centered_moments(std::span<const double> xs, std::span<const double> ys) {
  const double n = static_cast<double>(xs.size());
  Moments m;
  for (double x : xs) m.mean_x += x;
  for (double y : ys) m.mean_y += y;
  m.mean_x /= n;
  m.mean_y /= n;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - m.mean_x;
    const double dy = ys[i] - m.mean_y;
    m.ss_xx += dx * dx;
    m.ss_yy += dy * dy;
    m.ss_xy += dx * dy;
  }
  return m;
}

// Rows where every requested variable is present, with extracted columns.
struct CompleteRows {
  std::vector<const CountryRow*> rows;
  std::vector<std::vector<double>> columns;  // one per variable
  int dropped = 0;
};

CompleteRows complete_rows(std::span<const CountryRow> rows, std::span<const Variable> variables) {
  CompleteRows out;
  out.columns.resize(variables.size());
  for (const auto& row : rows) {
    std::vector<double> values;
    values.reserve(variables.size());
    bool complete = true;
    for (Variable v : variables) {
      if (auto value = variable_value(row, v)) {
        values.push_back(*value);
      } else {
        complete = false;
        break;
      }
    }
    if (!complete) {
      ++out.dropped;
      continue;
    }
    out.rows.push_back(&row);
    for (std::size_t i = 0; i < variables.size(); ++i) {
      out.columns[i].push_back(values[i]);
    }
  }
  return out;
}

}  // namespace

Variable parse_variable(std::string_view name) {
  const std::string key = lower(name);
  if (key == "n" || key == "institutions") return Variable::institutions;
  if (key == "c" || key == "citations") return Variable::citations;
  if (key == "i" || key == "impact") return Variable::impact;
  if (key == "x" || key == "exergy") return Variable::exergy;
  if (key == "e" || key == "energy") return Variable::energy;
  if (key == "s" || key == "entropy") return Variable::entropy;
  if (key == "eta" || key == "\xCE\xB7") return Variable::eta;  // Greek eta accepted
  if (key == "gdp" || key == "gdp_busd") return Variable::gdp;
  throw Error(Errc::unknown_variable, "unknown variable '" + std::string(name) + "'");
}

std::string_view variable_label(Variable v) noexcept {
  switch (v) {
    case Variable::institutions: return "N";
    case Variable::citations: return "C";
    case Variable::impact: return "i";
    case Variable::exergy: return "X";
    case Variable::energy: return "E";
    case Variable::entropy: return "S";
    case Variable::eta: return "eta";
    case Variable::gdp: return "GDP";
  }
  return "?";
}

std::optional<double> variable_value(const CountryRow& row, Variable v) {
  switch (v) {
    case Variable::institutions: return static_cast<double>(row.indicators.institutions);
    case Variable::citations: return static_cast<double>(row.indicators.citations);
    case Variable::impact: return row.indicators.impact;
    case Variable::exergy: return row.indicators.exergy;
    case Variable::energy: return row.indicators.energy;
    case Variable::entropy: return row.indicators.entropy;
    case Variable::eta: return row.indicators.eta;
    case Variable::gdp: return row.gdp_busd;
  }
  return std::nullopt;
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw Error(Errc::length_mismatch, "pearson needs equal-length vectors");
  }
  if (xs.size() < 3) {
    throw Error(Errc::too_few_points, "pearson needs at least 3 points");
  }
  const Moments m = centered_moments(xs, ys);
  if (m.ss_xx == 0.0 || m.ss_yy == 0.0) {
    throw Error(Errc::constant_vector, "pearson is undefined for a constant vector");
  }
  const double r = m.ss_xy / std::sqrt(m.ss_xx * m.ss_yy);
  return std::clamp(r, -1.0, 1.0);
}

CorrelationMatrix correlation_matrix(std::span<const CountryRow> rows,
                                     std::span<const Variable> variables,
                                     bool log10_transform) {
  CorrelationMatrix matrix;
  for (Variable v : variables) {
    matrix.labels.emplace_back(variable_label(v));
  }

  CompleteRows complete = complete_rows(rows, variables);
  matrix.rows_used = static_cast<int>(complete.rows.size());
  matrix.rows_dropped = complete.dropped;
  if (complete.rows.size() < 3) {
    throw Error(Errc::too_few_points,
                "correlation matrix needs at least 3 complete rows, have " +
                    std::to_string(complete.rows.size()));
  }
  if (log10_transform) {
    for (std::size_t i = 0; i < complete.columns.size(); ++i) {
      for (double& value : complete.columns[i]) {
        if (!(value > 0.0)) {
          throw Error(Errc::non_positive_for_log,
                      "log-scale correlation needs positive values; " + matrix.labels[i] +
                          " has " + std::to_string(value));
        }
        value = std::log10(value);
      }
    }
  }

  const std::size_t k = variables.size();
  matrix.values.assign(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    matrix.values[i][i] = 1.0;
    for (std::size_t j = i + 1; j < k; ++j) {
      const double r = pearson(complete.columns[i], complete.columns[j]);
      matrix.values[i][j] = r;
      matrix.values[j][i] = r;
    }
  }
  return matrix;
}

ScatterSeries scatter_dataset(std::span<const CountryRow> rows, Variable x_var, Variable y_var,
                              bool log_space, std::span<const double> slopes) {
  ScatterSeries series;
  series.x_label = variable_label(x_var);
  series.y_label = variable_label(y_var);
  series.log_space = log_space;

  const Variable variables[] = {x_var, y_var};
  const CompleteRows complete = complete_rows(rows, variables);
  for (std::size_t i = 0; i < complete.rows.size(); ++i) {
    double x = complete.columns[0][i];
    double y = complete.columns[1][i];
    const std::string& country = complete.rows[i]->indicators.country;
    if (log_space) {
      if (!(x > 0.0) || !(y > 0.0)) {
        throw Error(Errc::non_positive_for_log,
                    "log-space scatter needs positive values; " + country + " has " +
                        series.x_label + "=" + std::to_string(x) + ", " + series.y_label + "=" +
                        std::to_string(y));
      }
      x = std::log10(x);
      y = std::log10(y);
    }
    series.points.push_back({country, x, y});
  }

  if (!slopes.empty() && !series.points.empty()) {
    double min_x = series.points.front().x, max_x = series.points.front().x;
    double cx = 0.0, cy = 0.0;
    for (const auto& p : series.points) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      cx += p.x;
      cy += p.y;
    }
    cx /= static_cast<double>(series.points.size());
    cy /= static_cast<double>(series.points.size());
    for (double slope : slopes) {
      // Anchor each indicative line at the centroid of the point cloud.
      ReferenceLine line;
      line.slope = slope;
      line.x0 = min_x;
      line.y0 = cy + slope * (min_x - cx);
      line.x1 = max_x;
      line.y1 = cy + slope * (max_x - cx);
      series.reference_lines.push_back(line);
    }
  }
  return series;
}

double ols_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw Error(Errc::length_mismatch, "slope needs equal-length vectors");
  }
  if (xs.size() < 3) {
    throw Error(Errc::too_few_points, "slope needs at least 3 points");
  }
  const Moments m = centered_moments(xs, ys);
  if (m.ss_xx == 0.0) {
    throw Error(Errc::constant_vector, "slope is undefined when x is constant");
  }
  return m.ss_xy / m.ss_xx;
}

double loglog_slope(std::span<const CountryRow> rows, Variable x_var, Variable y_var) {
  const ScatterSeries series = scatter_dataset(rows, x_var, y_var, /*log_space=*/true, {});
  std::vector<double> xs, ys;
  xs.reserve(series.points.size());
  ys.reserve(series.points.size());
  for (const auto& p : series.points) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  return ols_slope(xs, ys);
}

}  // namespace sciwealth
