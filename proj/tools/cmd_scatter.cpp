#include <filesystem>
#include <iostream>
#include <utility>

#include "common.hpp"
#include "commands.hpp"
#include "sciwealth/errors.hpp"
#include "sciwealth/io.hpp"
#include "sciwealth/stats.hpp"

namespace sciwealth::cli {

namespace {

struct ScatterJob {
  std::string file_stem;
  std::vector<CountryRow> rows;
  Variable x;
  Variable y;
  std::vector<double> slopes;
};

std::string stem_for(Variable x, Variable y) {
  return std::string("scatter_") + std::string(variable_label(x)) + "_" +
         std::string(variable_label(y));
}

}  // namespace

int run_scatter(const ScatterOptions& options) {
  std::vector<Cohort> cohorts;
  const std::vector<CountryRow> rows =
      load_joined_rows(options.indicators, options.gdp, options.cohorts, &cohorts);

  std::vector<ScatterJob> jobs;
  if (options.preset == "figure1") {
    // Size-dependent indicators against GDP, with indicative slope lines.
    std::vector<double> slopes = options.slopes.empty()
                                     ? std::vector<double>{1.0, 1.5, 2.0}
                                     : options.slopes;
    for (Variable y : {Variable::institutions, Variable::citations, Variable::exergy,
                       Variable::energy}) {
      jobs.push_back({stem_for(Variable::gdp, y), rows, Variable::gdp, y, slopes});
    }
  } else if (options.preset == "figure2") {
    // Inequality against the second-order indicators, one file per cohort.
    if (cohorts.empty()) {
      throw Error(Errc::bad_config, "--preset figure2 needs a cohort config");
    }
    for (const auto& cohort : cohorts) {
      const CohortSelection selection = select_cohort(rows, cohort);
      for (Variable x : {Variable::exergy, Variable::energy}) {
        jobs.push_back({"scatter_" + slugify(cohort.name) + "_" +
                            std::string(variable_label(x)) + "_eta",
                        selection.rows, x, Variable::eta, options.slopes});
      }
    }
  } else if (!options.preset.empty()) {
    throw Error(Errc::bad_config, "unknown preset '" + options.preset + "'");
  } else {
    if (options.x_var.empty() || options.y_var.empty()) {
      throw Error(Errc::bad_config, "scatter needs --preset or both --x and --y");
    }
    jobs.push_back({stem_for(parse_variable(options.x_var), parse_variable(options.y_var)), rows,
                    parse_variable(options.x_var), parse_variable(options.y_var),
                    options.slopes});
  }

  const Precision precision = resolve_precision(options.precision);
  const std::string extension = options.format == "json" ? ".json" : ".csv";
  std::filesystem::create_directories(options.output_dir);
  for (const auto& job : jobs) {
    const ScatterSeries series =
        scatter_dataset(job.rows, job.x, job.y, options.log_scale, job.slopes);
    const std::string path =
        (std::filesystem::path(options.output_dir) / (job.file_stem + extension)).string();
    with_output(path, [&](std::ostream& out) {
      if (options.format == "json") {
        write_scatter_json(out, series);
      } else {
        write_scatter_csv(out, series, precision);
      }
    });
    std::cout << "wrote " << path << " (" << series.points.size() << " points, "
              << series.reference_lines.size() << " lines)\n";
  }
  return kExitOk;
}

}  // namespace sciwealth::cli
