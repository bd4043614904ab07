#include "naco/scoring/candidate_scorer.hpp"

#include <cmath>

#include "naco/prompts/prompts.hpp"

namespace naco::scoring {

CandidateScorer::CandidateScorer(llm::Gateway& gateway, llm::ModelConfig model, ScoreConfig config)
    : gateway_(gateway), model_(std::move(model)), config_(config) {
    model_.validate();
    config_.validate();
}

parse::CoTTrace CandidateScorer::cot_trace(const QGExample& example, const std::string& question,
                                           std::uint32_t run_index) {
    const CandidateQuestion probe{example.id, question, {}};
    const std::string prompt =
        prompts::build_cot_qa_prompt({example, probe, prompts::PromptMode::CotQa, false});
    const auto version = prompts::cot_qa_template_version();

    parse::CoTTrace trace =
        parse::parse_cot_response(gateway_.cached_complete({model_, prompt, run_index}, version));
    if (trace.degraded && config_.requery_degraded) {
        parse::CoTTrace retry = parse::parse_cot_response(
            gateway_.cached_complete({model_, prompt, kRequeryRunOffset + run_index}, version));
        if (!retry.degraded) trace = std::move(retry);
    }
    return trace;
}

std::optional<int> CandidateScorer::reference_complexity(const QGExample& example) {
    if (!example.reference_question) {
        throw PreconditionError("example '" + example.id + "' has no reference question");
    }
    std::map<int, int> histogram;
    for (int run = 0; run < config_.runs; ++run) {
        const auto trace =
            cot_trace(example, *example.reference_question, static_cast<std::uint32_t>(run));
        const int steps = parse::count_reasoning_steps(trace);
        if (steps >= 1) ++histogram[steps];
    }
    if (histogram.empty()) return std::nullopt;
    return histogram_mode(histogram);
}

RunRecord CandidateScorer::score_run(const QGExample& example, const CandidateQuestion& candidate,
                                     int expected_complexity, std::uint32_t run_index) {
    const auto trace = cot_trace(example, candidate.text, run_index);
    RunRecord record;
    record.run_index = run_index;
    record.verdict = trace.verdict;
    record.steps = parse::count_reasoning_steps(trace);
    record.answer = trace.answer;
    record.degraded = trace.degraded;
    record.expected_complexity = expected_complexity;
    record.n = naturalness_score(trace);
    record.a = answerability_score(trace, example.answer);
    record.c = complexity_similarity(record.steps, expected_complexity);
    record.naco = naco_aggregate(record.n, record.a, record.c, config_);
    return record;
}

CriterionScores CandidateScorer::combine(const std::vector<RunRecord>& runs) const {
    CriterionScores scores;
    if (runs.empty()) return scores;
    double steps = 0.0;
    double naco = 0.0;
    for (const auto& r : runs) {
        scores.n_cand += r.n;
        scores.a_cand += r.a;
        scores.c_cand += r.c;
        steps += r.steps;
        naco += r.naco;
    }
    const auto count = static_cast<double>(runs.size());
    scores.n_cand /= count;
    scores.a_cand /= count;
    scores.c_cand /= count;
    scores.c_cand_abs = static_cast<int>(std::lround(steps / count));
    scores.runs_used = static_cast<int>(runs.size());
    scores.naco = config_.averaging == RunAveraging::MeanOfRunScores
                      ? naco / count
                      : naco_aggregate(scores.n_cand, scores.a_cand, scores.c_cand, config_);
    return scores;
}

CandidateResult CandidateScorer::score_candidate(const QGExample& example,
                                                 const CandidateQuestion& candidate,
                                                 int expected_complexity) {
    CandidateResult result;
    for (int run = 0; run < config_.runs; ++run) {
        result.runs.push_back(
            score_run(example, candidate, expected_complexity, static_cast<std::uint32_t>(run)));
    }
    result.scores = combine(result.runs);
    return result;
}

parse::DirectEvalScores CandidateScorer::direct_eval_run(const QGExample& example,
                                                         const CandidateQuestion& candidate,
                                                         bool append_reference,
                                                         std::uint32_t run_index) {
    const std::string prompt = prompts::build_direct_eval_prompt(
        {example, candidate, prompts::PromptMode::DirectEval, append_reference});
    return parse::parse_direct_eval_response(gateway_.cached_complete(
        {model_, prompt, run_index}, prompts::direct_eval_template_version()));
}

DirectEvalResult CandidateScorer::combine_direct_eval(const std::vector<parse::DirectEvalScores>& runs) {
    DirectEvalResult result;
    result.runs_used = static_cast<int>(runs.size());
    if (runs.empty()) return result;
    for (const auto& r : runs) {
        result.naturalness += r.naturalness;
        result.answerability += r.answerability;
        result.complexity += r.complexity;
    }
    const auto count = static_cast<double>(runs.size());
    result.naturalness /= count;
    result.answerability /= count;
    result.complexity /= count;
    result.total = result.naturalness + result.answerability + result.complexity;
    return result;
}

}  // namespace naco::scoring
