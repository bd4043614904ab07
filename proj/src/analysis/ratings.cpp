#include "naco/analysis/ratings.hpp"

#include <map>

#include "naco/core/errors.hpp"

namespace naco::analysis {

std::vector<AggregatedRating> aggregate_human_ratings(std::span<const HumanRating> ratings) {
    if (ratings.empty()) throw EmptyRatings("no human ratings to aggregate");
    std::vector<AggregatedRating> out;
    std::map<std::pair<std::string, std::string>, std::size_t> index;
    for (const auto& r : ratings) {
        for (int v : {r.naturalness, r.answerability, r.complexity}) {
            if (v < 0 || v > 2) {
                throw OutOfRange("rating by '" + r.rater_id + "' for (" + r.example_id + ", " +
                                 r.system + ") is outside 0-2");
            }
        }
        auto [it, inserted] = index.try_emplace({r.example_id, r.system}, out.size());
        if (inserted) out.push_back({r.example_id, r.system, 0, 0, 0, 0, 0});
        auto& agg = out[it->second];
        agg.mean_naturalness += r.naturalness;
        agg.mean_answerability += r.answerability;
        agg.mean_complexity += r.complexity;
        ++agg.n_raters;
    }
    for (auto& agg : out) {
        const auto n = static_cast<double>(agg.n_raters);
        // Integer sum divided once, so equal totals compare equal when ranked.
        agg.mean_total = (agg.mean_naturalness + agg.mean_answerability + agg.mean_complexity) / n;
        agg.mean_naturalness /= n;
        agg.mean_answerability /= n;
        agg.mean_complexity /= n;
    }
    return out;
}

}  // namespace naco::analysis
