#include "sciwealth/errors.hpp"

namespace sciwealth {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::missing_column: return "missing_column";
    case Errc::malformed_row: return "malformed_row";
    case Errc::empty_input: return "empty_input";
    case Errc::duplicate_record: return "duplicate_record";
    case Errc::empty_group: return "empty_group";
    case Errc::zero_institutions: return "zero_institutions";
    case Errc::non_positive_energy: return "non_positive_energy";
    case Errc::negative_entropy: return "negative_entropy";
    case Errc::zero_world_value: return "zero_world_value";
    case Errc::bad_config: return "bad_config";
    case Errc::empty_cohort: return "empty_cohort";
    case Errc::duplicate_gdp_entry: return "duplicate_gdp_entry";
    case Errc::length_mismatch: return "length_mismatch";
    case Errc::constant_vector: return "constant_vector";
    case Errc::too_few_points: return "too_few_points";
    case Errc::non_positive_for_log: return "non_positive_for_log";
    case Errc::unknown_variable: return "unknown_variable";
    case Errc::unknown_country: return "unknown_country";
    case Errc::io_error: return "io_error";
  }
  return "unknown";
}

}  // namespace sciwealth
