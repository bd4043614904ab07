#pragma once

#include <span>
#include <string>
#include <vector>

namespace naco::analysis {

/// Correlation of one metric against one human-judgment target.
struct CorrelationReport {
    std::string metric;
    std::string target;  // naturalness | answerability | complexity | overall
    double pearson_r = 0.0;
    double spearman_rho = 0.0;
    double kendall_tau = 0.0;
    std::size_t n = 0;
};

/// Sample Pearson correlation. Throws DegenerateInput for mismatched lengths,
/// fewer than two points, or a constant vector.
double pearson(std::span<const double> x, std::span<const double> y);

/// Fractional ranks (1-based, ties share their average rank).
std::vector<double> fractional_ranks(std::span<const double> values);

/// Pearson on fractional ranks.
double spearman(std::span<const double> x, std::span<const double> y);

/// Tie-corrected Kendall tau-b, O(n log n) (Knight's merge-sort counting).
double kendall_tau(std::span<const double> x, std::span<const double> y);

CorrelationReport correlate(std::string metric, std::string target, std::span<const double> x,
                            std::span<const double> y);

}  // namespace naco::analysis
