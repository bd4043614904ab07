#pragma once

#include <optional>
#include <string>
#include <vector>

#include "naco/core/types.hpp"
#include "naco/llm/gateway.hpp"
#include "naco/parse/trace_parser.hpp"
#include "naco/scoring/scoring.hpp"

namespace naco::scoring {

/// Run indices at or above this offset are reserved for re-queries of
/// malformed responses, so they never collide with regular runs.
inline constexpr std::uint32_t kRequeryRunOffset = 1u << 20;

/// Outcome of one CoT-QA run for one candidate.
struct RunRecord {
    std::uint32_t run_index = 0;
    parse::Verdict verdict = parse::Verdict::Ok;
    int steps = 0;
    std::optional<std::string> answer;
    std::optional<std::string> degraded;
    int expected_complexity = 1;
    double n = 0.0;
    double a = 0.0;
    double c = 0.0;
    double naco = 0.0;
};

struct CandidateResult {
    CriterionScores scores;
    std::vector<RunRecord> runs;
};

struct DirectEvalResult {
    double naturalness = 0.0;  // means over the successful runs
    double answerability = 0.0;
    double complexity = 0.0;
    double total = 0.0;
    int runs_used = 0;
    std::vector<std::string> run_errors;
};

/// Drives the CoT-QA pipeline for single candidates: prompt, (cached)
/// completion, parse, per-run criterion scores, multi-run averaging.
class CandidateScorer {
public:
    CandidateScorer(llm::Gateway& gateway, llm::ModelConfig model, ScoreConfig config);

    const ScoreConfig& config() const { return config_; }
    const llm::ModelConfig& model() const { return model_; }

    /// Parsed CoT-QA trace for `question` asked against the example's passages.
    parse::CoTTrace cot_trace(const QGExample& example, const std::string& question,
                              std::uint32_t run_index);

    /// Expected complexity taken from the example's own reference question: the
    /// mode (ties to the smaller value) of its step counts over config.runs runs.
    /// Returns nullopt when no run yields a usable reasoning chain.
    std::optional<int> reference_complexity(const QGExample& example);

    RunRecord score_run(const QGExample& example, const CandidateQuestion& candidate,
                        int expected_complexity, std::uint32_t run_index);

    /// Combines per-run records according to config.averaging.
    CriterionScores combine(const std::vector<RunRecord>& runs) const;

    /// All runs of one candidate, sequentially.
    CandidateResult score_candidate(const QGExample& example, const CandidateQuestion& candidate,
                                    int expected_complexity);

    /// One DirectEval query; throws ParseFailed / OutOfRange on malformed output.
    parse::DirectEvalScores direct_eval_run(const QGExample& example,
                                            const CandidateQuestion& candidate,
                                            bool append_reference, std::uint32_t run_index);

    static DirectEvalResult combine_direct_eval(const std::vector<parse::DirectEvalScores>& runs);

private:
    llm::Gateway& gateway_;
    llm::ModelConfig model_;
    ScoreConfig config_;
};

}  // namespace naco::scoring
