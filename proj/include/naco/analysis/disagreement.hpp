#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "naco/baselines/score_table.hpp"

namespace naco::analysis {

struct DisagreementSample {
    std::vector<std::pair<baselines::RowKey, baselines::RowKey>> pairs;
    std::size_t available = 0;  // number of disagreeing pairs in the table
    /// True when fewer than k pairs disagree; `pairs` then holds all of them.
    bool not_enough = false;
};

/// Uniformly samples k unordered row pairs on which the two metrics order the
/// candidates in strictly opposite directions. Deterministic for a given seed
/// on every platform. Rows missing either metric are ignored.
DisagreementSample sample_disagreement_pairs(const baselines::ScoreTable& table,
                                             const std::string& metric_a,
                                             const std::string& metric_b, std::size_t k,
                                             std::uint64_t seed);

}  // namespace naco::analysis
