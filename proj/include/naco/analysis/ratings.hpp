#pragma once

#include <span>
#include <string>
#include <vector>

namespace naco::analysis {

/// One annotator's 3-point ratings (0-2) of one candidate.
struct HumanRating {
    std::string example_id;
    std::string system;
    std::string rater_id;
    int naturalness = 0;
    int answerability = 0;
    int complexity = 0;
};

struct AggregatedRating {
    std::string example_id;
    std::string system;
    double mean_naturalness = 0.0;
    double mean_answerability = 0.0;
    double mean_complexity = 0.0;
    double mean_total = 0.0;  // sum of the three means
    int n_raters = 0;
};

/// Averages ratings per (example_id, system), in order of first appearance.
/// Throws EmptyRatings for an empty input and OutOfRange for a rating outside 0-2.
std::vector<AggregatedRating> aggregate_human_ratings(std::span<const HumanRating> ratings);

}  // namespace naco::analysis
