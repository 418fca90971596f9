#include <iostream>

#include "common.hpp"
#include "commands.hpp"
#include "sciwealth/io.hpp"
#include "sciwealth/stats.hpp"

namespace sciwealth::cli {

int run_correlate(const CorrelateOptions& options) {
  const std::vector<CountryRow> rows =
      load_joined_rows(options.indicators, options.gdp, options.cohorts, nullptr);

  std::vector<Variable> variables;
  variables.reserve(options.variables.size());
  for (const auto& name : options.variables) {
    variables.push_back(parse_variable(name));
  }

  const CorrelationMatrix matrix = correlation_matrix(rows, variables, options.log_scale);
  std::cerr << "correlations over " << matrix.rows_used << " rows (" << matrix.rows_dropped
            << " dropped for missing values)\n";

  const Precision precision = resolve_precision(options.precision);
  with_output(options.output, [&](std::ostream& out) {
    if (options.format == "json") {
      write_correlation_json(out, matrix);
    } else {
      write_correlation_csv(out, matrix, precision);
    }
  });
  if (options.output != "-") {
    std::cout << "wrote " << matrix.labels.size() << "x" << matrix.labels.size()
              << " correlation matrix to " << options.output << '\n';
  }
  return kExitOk;
}

}  // namespace sciwealth::cli
