#include "naco/baselines/rouge.hpp"

#include <algorithm>
#include <vector>

#include "naco/baselines/bleu.hpp"
#include "naco/core/errors.hpp"

namespace naco::baselines {

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b) {
    // Two-row DP table.
    std::vector<std::size_t> prev(b.size() + 1, 0);
    std::vector<std::size_t> cur(b.size() + 1, 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

double rouge_l(std::string_view candidate, std::string_view reference) {
    const auto cand = tokenize_for_overlap(candidate);
    const auto ref = tokenize_for_overlap(reference);
    if (cand.empty() || ref.empty()) return 0.0;
    const auto lcs = static_cast<double>(lcs_length(cand, ref));
    if (lcs == 0.0) return 0.0;
    const double precision = lcs / static_cast<double>(cand.size());
    const double recall = lcs / static_cast<double>(ref.size());
    return 2.0 * precision * recall / (precision + recall);
}

double max_over_references(std::span<const double> scores) {
    if (scores.empty()) throw EmptyList("max_over_references needs at least one score");
    return *std::max_element(scores.begin(), scores.end());
}

}  // namespace naco::baselines
