#pragma once

#include <string>

#include "naco/scoring/scoring.hpp"

namespace naco::io {

/// JSON document {dataset_id, expected_complexity, sample_size, histogram,
/// prompt_template_version, model_name}; histogram keys are step counts.
void write_profile(const scoring::CalibrationProfile& profile, const std::string& path);
scoring::CalibrationProfile read_profile(const std::string& path);

}  // namespace naco::io
