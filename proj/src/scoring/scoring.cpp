#include "naco/scoring/scoring.hpp"

#include <algorithm>
#include <cmath>

#include "naco/core/text.hpp"

namespace naco::scoring {

void ScoreConfig::validate() const {
    const auto& w = weights;
    if (w.naturalness < 0 || w.answerability < 0 || w.complexity < 0) {
        throw PreconditionError("criterion weights must be non-negative");
    }
    if (std::abs(w.naturalness + w.answerability + w.complexity - 1.0) > 1e-9) {
        throw PreconditionError("criterion weights must sum to 1");
    }
    if (runs < 1) throw PreconditionError("runs must be >= 1");
}

int naturalness_score(const parse::CoTTrace& trace) {
    return trace.verdict == parse::Verdict::Ok ? 1 : 0;
}

double answerability_score(const parse::CoTTrace& trace, std::string_view gold) {
    if (!trace.answer) return 0.0;
    return core::token_f1(*trace.answer, gold);
}

int histogram_mode(const std::map<int, int>& histogram) {
    if (histogram.empty()) throw NoUsableTraces("empty step-count histogram");
    // std::map iterates ascending, so strict '>' keeps the smaller count on ties.
    auto best = histogram.begin();
    for (auto it = histogram.begin(); it != histogram.end(); ++it) {
        if (it->second > best->second) best = it;
    }
    return best->first;
}

CalibrationProfile calibrate_expected_complexity(std::span<const parse::CoTTrace> reference_traces,
                                                 std::string dataset_id) {
    CalibrationProfile profile;
    profile.dataset_id = std::move(dataset_id);
    profile.sample_size = static_cast<int>(reference_traces.size());
    for (const auto& trace : reference_traces) {
        const int steps = parse::count_reasoning_steps(trace);
        if (steps >= 1) ++profile.histogram[steps];
    }
    if (profile.histogram.empty()) {
        throw NoUsableTraces("none of the " + std::to_string(reference_traces.size()) +
                             " reference traces for dataset '" + profile.dataset_id +
                             "' produced a usable reasoning chain");
    }
    profile.expected_complexity = histogram_mode(profile.histogram);
    return profile;
}

double complexity_similarity(int c_abs, int c_expected) {
    if (c_abs < 0 || c_expected < 1) {
        throw PreconditionError("complexity_similarity requires c_abs >= 0 and c_expected >= 1");
    }
    return static_cast<double>(std::min(c_abs, c_expected)) /
           static_cast<double>(std::max(c_abs, c_expected));
}

double naco_aggregate(double n, double a, double c, const ScoreConfig& config) {
    const bool gated = config.zeroing == ZeroingRule::Either ? (n == 0.0 || a == 0.0)
                                                             : (n == 0.0 && a == 0.0);
    if (gated) return 0.0;
    const auto& w = config.weights;
    if (w.naturalness == w.answerability && w.answerability == w.complexity) {
        return (n + a + c) / 3.0;
    }
    return w.naturalness * n + w.answerability * a + w.complexity * c;
}

}  // namespace naco::scoring
