#pragma once

#include <span>
#include <vector>

#include "naco/baselines/score_table.hpp"

namespace naco::analysis {

/// (s - min) / (max - min); a constant vector maps to all 0.5.
std::vector<double> min_max_normalize(std::span<const double> scores);

/// Per-metric min-max normalization across every scored row of the table.
/// Empty cells stay empty.
baselines::ScoreTable normalize_columns(const baselines::ScoreTable& table);

}  // namespace naco::analysis
