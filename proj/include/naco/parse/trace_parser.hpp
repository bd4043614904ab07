#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "naco/core/errors.hpp"

namespace naco::parse {

enum class Verdict { Ok, NotAQuestion, Unnatural };

std::string_view to_string(Verdict verdict);

/// Structured view of one chain-of-thought QA response.
struct CoTTrace {
    Verdict verdict = Verdict::Ok;
    std::vector<std::string> steps;  // markers stripped, in order; empty unless verdict is Ok
    std::optional<std::string> answer;
    std::string raw;
    /// Set when the response deviated from the requested format (no step block,
    /// or no answer although the verdict is Ok). The trace is still usable.
    std::optional<std::string> degraded;
};

/// Raised by parse_cot_response_strict; carries the best-effort trace.
class ParseDegraded : public Error {
public:
    ParseDegraded(std::string what, CoTTrace trace)
        : Error(std::move(what)), trace_(std::move(trace)) {}
    const CoTTrace& trace() const { return trace_; }

private:
    CoTTrace trace_;
};

/// Total parse: never throws, flags format deviations in CoTTrace::degraded.
CoTTrace parse_cot_response(std::string_view raw);

/// Same parse, but a degraded result is raised as ParseDegraded.
CoTTrace parse_cot_response_strict(std::string_view raw);

/// Number of reasoning steps; 0 whenever the verdict is not Ok.
int count_reasoning_steps(const CoTTrace& trace);

/// Renders a trace in the canonical response layout the CoT-QA prompt asks for.
/// parse_cot_response(render_cot_response(t)) reproduces t's verdict, steps and answer.
std::string render_cot_response(Verdict verdict, const std::vector<std::string>& steps,
                                const std::optional<std::string>& answer);

struct DirectEvalScores {
    int naturalness = 0;
    int answerability = 0;
    int complexity = 0;

    int total() const { return naturalness + answerability + complexity; }
    friend bool operator==(const DirectEvalScores&, const DirectEvalScores&) = default;
};

/// Reads the "Naturalness: x / Answerability: x / Complexity: x" lines.
/// Throws ParseFailed for a missing or non-integer line, OutOfRange outside 0-2.
DirectEvalScores parse_direct_eval_response(std::string_view raw);

}  // namespace naco::parse
