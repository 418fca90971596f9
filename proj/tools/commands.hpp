#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sciwealth/format.hpp"

namespace sciwealth::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;  // bad flags, unreadable/unwritable paths
inline constexpr int kExitData = 2;   // malformed content, failed validation

struct IngestOptions {
  std::string input;
  std::string input_format = "auto";  // tsv, csv or auto (by extension)
  std::int64_t threshold = 1000;
  std::string exclude = "CN,RU";
  bool strict = true;
  std::string dedup = "report";  // report, keep-first, sum, fail
  bool seed_sample = false;
  std::uint64_t seed = 42;
  std::string sample_ranking_out;
  std::string output = "-";
  std::string format = "csv";  // csv or json
};

struct IndicatorsOptions {
  std::string input;
  std::string input_format = "auto";
  bool include_world = false;
  std::string output = "-";
  std::string format = "csv";
  std::string precision = "full";
};

struct ReportOptions {
  std::string input;
  std::string input_format = "auto";
  std::vector<std::string> countries;
  std::string output = "-";
  std::string format = "csv";
  std::string precision = "display";
};

struct CorrelateOptions {
  std::string indicators;
  std::string gdp;
  std::string cohorts;
  std::vector<std::string> variables = {"N", "C", "X", "E", "GDP", "i", "eta"};
  bool log_scale = false;
  std::string output = "-";
  std::string format = "csv";
  std::string precision = "display";
};

struct ScatterOptions {
  std::string indicators;
  std::string gdp;
  std::string cohorts;
  std::string preset;  // figure1, figure2 or empty for --x/--y
  std::string x_var;
  std::string y_var;
  bool log_scale = true;
  std::vector<double> slopes;
  std::string output_dir = ".";
  std::string format = "csv";
  std::string precision = "full";
};

int run_ingest(const IngestOptions& options);
int run_indicators(const IndicatorsOptions& options);
int run_report(const ReportOptions& options);
int run_correlate(const CorrelateOptions& options);
int run_scatter(const ScatterOptions& options);

}  // namespace sciwealth::cli
