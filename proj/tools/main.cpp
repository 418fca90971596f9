#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "sciwealth/errors.hpp"

using namespace sciwealth;
using namespace sciwealth::cli;

int main(int argc, char** argv) {
  CLI::App app{"National scientific-wealth indicators from citation-ranking data"};
  app.require_subcommand(1);

  IngestOptions ingest;
  auto* cmd_ingest = app.add_subcommand(
      "ingest", "Parse a ranking export into a validated institutions file");
  cmd_ingest->add_option("-i,--input", ingest.input, "Ranking file (TSV or CSV with header)");
  cmd_ingest->add_option("--input-format", ingest.input_format, "Input dialect")
      ->check(CLI::IsMember({"auto", "tsv", "csv"}))
      ->capture_default_str();
  cmd_ingest->add_option("-t,--threshold", ingest.threshold,
                         "Keep institutions with citations strictly above this")
      ->capture_default_str();
  cmd_ingest->add_option("--exclude", ingest.exclude,
                         "Comma-separated country codes to drop (\"\" disables)")
      ->capture_default_str();
  cmd_ingest->add_flag("--strict,!--no-strict", ingest.strict,
                       "Fail on malformed rows instead of skipping them");
  cmd_ingest->add_option("--dedup", ingest.dedup, "Duplicate (name, country) policy")
      ->check(CLI::IsMember({"report", "keep-first", "sum", "fail"}))
      ->capture_default_str();
  cmd_ingest->add_flag("--seed-sample", ingest.seed_sample,
                       "Generate a synthetic ranking instead of reading --input");
  cmd_ingest->add_option("--seed", ingest.seed, "Seed for --seed-sample")
      ->capture_default_str();
  cmd_ingest->add_option("--sample-ranking-out", ingest.sample_ranking_out,
                         "Also write the raw synthetic ranking here");
  cmd_ingest->add_option("-o,--output", ingest.output, "Institutions file (\"-\" for stdout)")
      ->capture_default_str();
  cmd_ingest->add_option("--format", ingest.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  IndicatorsOptions indicators;
  auto* cmd_indicators = app.add_subcommand(
      "indicators", "Compute per-country indicator rows from an institutions file");
  cmd_indicators->add_option("-i,--input", indicators.input, "Institutions file")->required();
  cmd_indicators->add_option("--input-format", indicators.input_format, "Input dialect")
      ->check(CLI::IsMember({"auto", "tsv", "csv"}))
      ->capture_default_str();
  cmd_indicators->add_flag("--world", indicators.include_world,
                           "Prepend a WORLD row pooled over all records");
  cmd_indicators->add_option("-o,--output", indicators.output, "Output path")
      ->capture_default_str();
  cmd_indicators->add_option("--format", indicators.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd_indicators->add_option("--precision", indicators.precision, "Number formatting")
      ->check(CLI::IsMember({"full", "display"}))
      ->capture_default_str();

  ReportOptions report;
  auto* cmd_report =
      app.add_subcommand("report", "WORLD and per-country summary with shares of world");
  cmd_report->add_option("-i,--input", report.input, "Institutions file")->required();
  cmd_report->add_option("--input-format", report.input_format, "Input dialect")
      ->check(CLI::IsMember({"auto", "tsv", "csv"}))
      ->capture_default_str();
  cmd_report->add_option("-c,--countries", report.countries,
                         "Country codes to report alongside WORLD")
      ->delimiter(',');
  cmd_report->add_option("-o,--output", report.output, "Output path")->capture_default_str();
  cmd_report->add_option("--format", report.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd_report->add_option("--precision", report.precision, "Number formatting")
      ->check(CLI::IsMember({"full", "display"}))
      ->capture_default_str();

  CorrelateOptions correlate;
  auto* cmd_correlate =
      app.add_subcommand("correlate", "Pearson correlation matrix over cohort countries");
  cmd_correlate->add_option("--indicators", correlate.indicators, "Indicator table (full precision)")
      ->required();
  cmd_correlate->add_option("--gdp", correlate.gdp, "GDP table (country,gdp_busd)")->required();
  cmd_correlate->add_option("--cohorts", correlate.cohorts, "Cohort config JSON");
  cmd_correlate->add_option("--variables", correlate.variables, "Variables to correlate")
      ->delimiter(',')
      ->capture_default_str();
  cmd_correlate->add_flag("--log", correlate.log_scale,
                          "Correlate base-10 logs instead of raw values");
  cmd_correlate->add_option("-o,--output", correlate.output, "Output path")
      ->capture_default_str();
  cmd_correlate->add_option("--format", correlate.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd_correlate->add_option("--precision", correlate.precision, "Number formatting")
      ->check(CLI::IsMember({"full", "display"}))
      ->capture_default_str();

  ScatterOptions scatter;
  auto* cmd_scatter = app.add_subcommand("scatter", "Plot-ready scatter datasets");
  cmd_scatter->add_option("--indicators", scatter.indicators, "Indicator table (full precision)")
      ->required();
  cmd_scatter->add_option("--gdp", scatter.gdp, "GDP table (country,gdp_busd)")->required();
  cmd_scatter->add_option("--cohorts", scatter.cohorts, "Cohort config JSON");
  cmd_scatter->add_option("--preset", scatter.preset,
                          "figure1 (GDP vs N,C,X,E) or figure2 (eta vs X,E per cohort)");
  cmd_scatter->add_option("-x,--x", scatter.x_var, "X variable for a custom pair");
  cmd_scatter->add_option("-y,--y", scatter.y_var, "Y variable for a custom pair");
  cmd_scatter->add_flag("--log,!--no-log", scatter.log_scale,
                        "Store base-10 logs of both coordinates");
  cmd_scatter->add_option("--slopes", scatter.slopes,
                          "Reference-line slopes (figure1 defaults to 1.0,1.5,2.0)")
      ->delimiter(',');
  cmd_scatter->add_option("--output-dir", scatter.output_dir, "Directory for scatter files")
      ->capture_default_str();
  cmd_scatter->add_option("--format", scatter.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd_scatter->add_option("--precision", scatter.precision, "Number formatting")
      ->check(CLI::IsMember({"full", "display"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(cmd_ingest)) return run_ingest(ingest);
    if (app.got_subcommand(cmd_indicators)) return run_indicators(indicators);
    if (app.got_subcommand(cmd_report)) return run_report(report);
    if (app.got_subcommand(cmd_correlate)) return run_correlate(correlate);
    if (app.got_subcommand(cmd_scatter)) return run_scatter(scatter);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::io_error ? kExitUsage : kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
