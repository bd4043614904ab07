#include "naco/prompts/prompts.hpp"

#include <map>

#include "naco/core/errors.hpp"
#include "naco/prompts/prompt_assets.hpp"

namespace naco::prompts {

namespace {

using Bindings = std::map<std::string, std::string, std::less<>>;

// Single pass over the template so substituted text is never re-expanded.
std::string render(std::string_view tmpl, const Bindings& bindings) {
    std::string out;
    out.reserve(tmpl.size() + 1024);
    std::size_t pos = 0;
    while (pos < tmpl.size()) {
        const auto open = tmpl.find("{{", pos);
        if (open == std::string_view::npos) {
            out.append(tmpl.substr(pos));
            break;
        }
        const auto close = tmpl.find("}}", open + 2);
        if (close == std::string_view::npos) {
            out.append(tmpl.substr(pos));
            break;
        }
        out.append(tmpl.substr(pos, open - pos));
        const auto name = tmpl.substr(open + 2, close - open - 2);
        auto it = bindings.find(name);
        if (it == bindings.end()) {
            throw Error("prompt template references unbound slot '" + std::string(name) + "'");
        }
        out.append(it->second);
        pos = close + 2;
    }
    return out;
}

std::string passage_block(const QGExample& example) {
    std::string block;
    for (std::size_t i = 0; i < example.passages.size(); ++i) {
        if (i > 0) block += "\n\n";
        block += "Context Passage " + std::to_string(i + 1) + ": " + example.passages[i];
    }
    return block;
}

void require_passages(const QGExample& example) {
    if (example.passages.empty()) {
        throw PreconditionError("example '" + example.id + "' has no context passages");
    }
    if (example.passages.size() > 2) {
        throw PreconditionError("example '" + example.id + "' has more than two context passages");
    }
}

}  // namespace

std::string_view cot_qa_template_version() { return assets::kCotQaVersion; }
std::string_view direct_eval_template_version() { return assets::kDirectEvalVersion; }

std::string_view template_version(PromptMode mode) {
    return mode == PromptMode::CotQa ? cot_qa_template_version() : direct_eval_template_version();
}

std::string build_cot_qa_prompt(const PromptRequest& request) {
    if (request.mode != PromptMode::CotQa) {
        throw PreconditionError("build_cot_qa_prompt called with a non CoT-QA request");
    }
    require_passages(request.example);
    if (request.append_reference) {
        throw PreconditionError("the reference-question suffix applies to DirectEval prompts only");
    }
    const bool two = request.example.passages.size() == 2;
    std::string prompt = render(assets::kCotQaTemplate,
                                {{"passage_count", two ? "two" : "one"},
                                 {"passage_noun", two ? "passages" : "passage"},
                                 {"passages", passage_block(request.example)},
                                 {"sentence", request.candidate.text}});
    return prompt;
}

std::string build_direct_eval_prompt(const PromptRequest& request) {
    if (request.mode != PromptMode::DirectEval) {
        throw PreconditionError("build_direct_eval_prompt called with a non DirectEval request");
    }
    require_passages(request.example);
    if (request.append_reference && !request.example.reference_question) {
        throw PreconditionError("reference question requested but example '" + request.example.id +
                                "' has none");
    }
    const bool two = request.example.passages.size() == 2;
    std::string prompt = render(
        assets::kDirectEvalTemplate,
        {{"passage_description",
          two ? "2 passages that share some common information" : "1 passage"},
         {"span_source", two ? "one of the two passages" : "the passage"},
         {"complexity_question",
          two ? "Does the question require reasoning over both passages? An acceptable question "
                "should use information from both passages, not just one."
              : "Does the question require reasoning over the passage?"},
         {"passages", passage_block(request.example)},
         {"answer", request.example.answer},
         {"candidate", request.candidate.text}});
    if (request.append_reference) {
        prompt += "\nReference question: " + *request.example.reference_question + "\n";
    }
    return prompt;
}

std::string build_prompt(const PromptRequest& request) {
    return request.mode == PromptMode::CotQa ? build_cot_qa_prompt(request)
                                             : build_direct_eval_prompt(request);
}

}  // namespace naco::prompts
