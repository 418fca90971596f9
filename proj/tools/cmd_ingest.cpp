#include <iostream>
#include <sstream>

#include "common.hpp"
#include "commands.hpp"
#include "sciwealth/errors.hpp"
#include "sciwealth/ingest.hpp"
#include "sciwealth/io.hpp"
#include "sciwealth/synthetic.hpp"

namespace sciwealth::cli {

namespace {

DedupPolicy parse_dedup(const std::string& name) {
  if (name == "keep-first") return DedupPolicy::keep_first;
  if (name == "sum") return DedupPolicy::sum;
  if (name == "fail") return DedupPolicy::fail;
  throw Error(Errc::bad_config, "unknown dedup policy '" + name + "'");
}

}  // namespace

int run_ingest(const IngestOptions& options) {
  IngestConfig config;
  config.threshold = options.threshold;
  config.excluded_countries = parse_code_set(options.exclude);
  config.strict = options.strict;
  config.validate();

  if (!options.seed_sample && options.input.empty()) {
    throw Error(Errc::io_error, "ingest needs --input or --seed-sample");
  }

  ParseResult parsed;
  if (options.seed_sample) {
    parsed.records = synthetic_ranking(options.seed);
    if (!options.sample_ranking_out.empty()) {
      with_output(options.sample_ranking_out, [&](std::ostream& out) {
        write_ranking(out, parsed.records,
                      resolve_dialect("auto", options.sample_ranking_out));
      });
    }
  } else {
    auto in = open_input(options.input);
    parsed = parse_ranking(in, resolve_dialect(options.input_format, options.input),
                           config.strict);
  }
  for (const auto& warning : parsed.warnings) {
    std::cerr << "warning: " << warning << '\n';
  }

  const ValidationReport report = validate(parsed.records);
  std::cerr << report.summary();

  std::vector<InstitutionRecord> records;
  bool unresolved_duplicates = !report.duplicates.empty();
  if (options.dedup == "report") {
    records = std::move(parsed.records);
  } else {
    records = deduplicate(parsed.records, parse_dedup(options.dedup));
    unresolved_duplicates = false;
  }

  const std::size_t parsed_count = records.size();
  records = filter_threshold(records, config.threshold);
  const std::size_t above_threshold = records.size();
  records = exclude_countries(records, config.excluded_countries);

  with_output(options.output, [&](std::ostream& out) {
    if (options.format == "json") {
      write_institutions_json(out, records);
    } else {
      write_ranking(out, records, csv::Dialect::csv);
    }
  });

  std::ostringstream summary;
  summary << "kept " << records.size() << " of " << parsed_count << " records ("
          << (parsed_count - above_threshold) << " at or below threshold " << config.threshold
          << ", " << (above_threshold - records.size()) << " in excluded countries)";
  if (options.output != "-") std::cout << summary.str() << '\n';

  if (config.strict && unresolved_duplicates) {
    std::cerr << "error: duplicate records present and --dedup report leaves them unresolved\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace sciwealth::cli
