#include <iostream>
#include <map>
#include <vector>

#include "common.hpp"
#include "commands.hpp"
#include "sciwealth/country.hpp"
#include "sciwealth/errors.hpp"
#include "sciwealth/indicators.hpp"
#include "sciwealth/io.hpp"

namespace sciwealth::cli {

int run_report(const ReportOptions& options) {
  auto in = open_input(options.input);
  const ParseResult parsed =
      parse_ranking(in, resolve_dialect(options.input_format, options.input), /*strict=*/true);

  const CountryIndicators world = world_indicators(parsed.records);

  std::map<std::string, std::vector<InstitutionRecord>> groups;
  for (const auto& record : parsed.records) {
    groups[record.country].push_back(record);
  }

  std::vector<ReportRow> rows;
  rows.push_back({world, 100.0, 100.0, 100.0, 100.0});
  for (const auto& raw_code : options.countries) {
    const std::string code = to_upper_ascii(raw_code);
    auto it = groups.find(code);
    if (it == groups.end()) {
      throw Error(Errc::unknown_country, "no records for country '" + code + "'");
    }
    CountryIndicators ind = group_indicators(code, it->second);
    ReportRow row;
    row.share_institutions = share_of_world(static_cast<double>(ind.institutions),
                                            static_cast<double>(world.institutions));
    row.share_citations = share_of_world(static_cast<double>(ind.citations),
                                         static_cast<double>(world.citations));
    row.share_exergy = share_of_world(ind.exergy, world.exergy);
    row.share_energy = share_of_world(ind.energy, world.energy);
    row.indicators = std::move(ind);
    rows.push_back(std::move(row));
  }

  const Precision precision = resolve_precision(options.precision);
  with_output(options.output, [&](std::ostream& out) {
    if (options.format == "json") {
      write_report_json(out, rows);
    } else {
      write_report_csv(out, rows, precision);
    }
  });
  if (options.output != "-") {
    std::cout << "wrote report for WORLD and " << options.countries.size() << " countries to "
              << options.output << '\n';
  }
  return kExitOk;
}

}  // namespace sciwealth::cli
