#include <iostream>

#include "common.hpp"
#include "commands.hpp"
#include "sciwealth/indicators.hpp"
#include "sciwealth/io.hpp"

namespace sciwealth::cli {

int run_indicators(const IndicatorsOptions& options) {
  auto in = open_input(options.input);
  const ParseResult parsed =
      parse_ranking(in, resolve_dialect(options.input_format, options.input), /*strict=*/true);

  std::vector<CountryIndicators> rows;
  if (options.include_world) {
    rows.push_back(world_indicators(parsed.records));
  }
  for (auto& row : country_indicators(parsed.records)) {
    rows.push_back(std::move(row));
  }

  const Precision precision = resolve_precision(options.precision);
  with_output(options.output, [&](std::ostream& out) {
    if (options.format == "json") {
      write_indicators_json(out, rows);
    } else {
      write_indicators_csv(out, rows, precision);
    }
  });
  if (options.output != "-") {
    std::cout << "wrote " << rows.size() << " indicator rows to " << options.output << '\n';
  }
  return kExitOk;
}

}  // namespace sciwealth::cli
