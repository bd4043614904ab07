#pragma once

#include <string>
#include <string_view>

#include "naco/core/types.hpp"

namespace naco::prompts {

enum class PromptMode { CotQa, DirectEval };

struct PromptRequest {
    const QGExample& example;
    const CandidateQuestion& candidate;
    PromptMode mode = PromptMode::CotQa;
    bool append_reference = false;
};

/// Versions of the bundled template assets; recorded with every score record.
std::string_view cot_qa_template_version();
std::string_view direct_eval_template_version();
std::string_view template_version(PromptMode mode);

/// Renders the chain-of-thought QA prompt. Throws PreconditionError on a wrong
/// mode or an example without passages.
std::string build_cot_qa_prompt(const PromptRequest& request);

/// Renders the human-rubric prompt for a single candidate. With
/// append_reference the reference question trails the prompt.
std::string build_direct_eval_prompt(const PromptRequest& request);

std::string build_prompt(const PromptRequest& request);

}  // namespace naco::prompts
