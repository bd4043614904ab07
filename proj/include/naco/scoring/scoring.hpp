#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "naco/parse/trace_parser.hpp"

namespace naco::scoring {

/// How the hierarchical gate combines the two prerequisite criteria.
/// Either: NACo is 0 when naturalness is 0 OR answerability is 0 (default).
/// Both:   NACo is 0 only when both are 0.
enum class ZeroingRule { Either, Both };

/// MeanOfRunScores averages the per-run NACo values (default);
/// ScoreOfMeanComponents aggregates the per-criterion means once.
enum class RunAveraging { MeanOfRunScores, ScoreOfMeanComponents };

enum class DisplayScale { Unit, Percent };

struct Weights {
    double naturalness = 1.0 / 3.0;
    double answerability = 1.0 / 3.0;
    double complexity = 1.0 / 3.0;
};

struct ScoreConfig {
    Weights weights;
    int runs = 3;
    DisplayScale display_scale = DisplayScale::Unit;
    ZeroingRule zeroing = ZeroingRule::Either;
    RunAveraging averaging = RunAveraging::MeanOfRunScores;
    bool requery_degraded = false;  // one extra query when a CoT response is malformed

    /// Throws PreconditionError for negative weights, weights not summing to 1, or runs < 1.
    void validate() const;
    double display(double unit_value) const {
        return display_scale == DisplayScale::Percent ? unit_value * 100.0 : unit_value;
    }
};

struct CriterionScores {
    double n_cand = 0.0;  // mean of per-run {0,1} verdicts
    double a_cand = 0.0;
    int c_cand_abs = 0;   // rounded mean step count
    double c_cand = 0.0;
    double naco = 0.0;
    int runs_used = 0;
};

/// Dataset-level expected complexity: the most frequent step count over the
/// CoT traces of reference questions.
struct CalibrationProfile {
    std::string dataset_id;
    int expected_complexity = 1;
    int sample_size = 0;             // reference traces examined
    std::map<int, int> histogram;    // step count -> frequency, usable traces only
    std::string prompt_template_version;
    std::string model_name;
};

int naturalness_score(const parse::CoTTrace& trace);
double answerability_score(const parse::CoTTrace& trace, std::string_view gold);

/// Mode of the step counts of Ok traces that show at least one step; ties go to
/// the smaller count. Throws NoUsableTraces when no trace qualifies.
CalibrationProfile calibrate_expected_complexity(std::span<const parse::CoTTrace> reference_traces,
                                                 std::string dataset_id);

/// Mode of a step-count histogram with ties broken toward the smaller count.
int histogram_mode(const std::map<int, int>& histogram);

/// 1 - |c_abs - c_expected| / max(c_abs, c_expected), computed as the equivalent
/// min/max ratio. Requires c_abs >= 0 and c_expected >= 1.
double complexity_similarity(int c_abs, int c_expected);

/// Weighted sum of the three criteria behind the hierarchical gate.
double naco_aggregate(double n, double a, double c, const ScoreConfig& config);

}  // namespace naco::scoring
