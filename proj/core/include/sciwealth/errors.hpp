#pragma once

#include <stdexcept>
#include <string>

namespace sciwealth {

/// Machine-checkable reason attached to every library error.
enum class Errc {
  // ingest
  missing_column,
  malformed_row,
  empty_input,
  duplicate_record,
  // indicators
  empty_group,
  zero_institutions,
  non_positive_energy,
  negative_entropy,
  zero_world_value,
  // cohorts
  bad_config,
  empty_cohort,
  duplicate_gdp_entry,
  // stats
  length_mismatch,
  constant_vector,
  too_few_points,
  non_positive_for_log,
  unknown_variable,
  // cli / io
  unknown_country,
  io_error,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sciwealth
