#include "naco/parse/trace_parser.hpp"

#include <array>
#include <charconv>
#include <regex>

#include "naco/core/text.hpp"

namespace naco::parse {

namespace {

using core::contains_icase;
using core::starts_with_icase;
using core::trim;

constexpr std::string_view kAnsToken = "<ans>";
constexpr std::string_view kAnsCloseToken = "</ans>";

std::string_view strip_bold(std::string_view s) {
    s = trim(s);
    while (s.starts_with("**")) s = trim(s.substr(2));
    return s;
}

// Strips one list bullet ("-", "*", "•").
std::string_view strip_bullet(std::string_view s) {
    s = trim(s);
    if (s.starts_with("- ") || s.starts_with("* ") || s == "-" || s == "*") return trim(s.substr(1));
    if (s.starts_with("\xE2\x80\xA2")) return trim(s.substr(3));
    return s;
}

// Strips an ordinal such as "3." or "3)" or "b." / "b)" followed by a space.
std::optional<std::string_view> strip_ordinal(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == 0 && s.size() >= 2 && s[0] >= 'a' && s[0] <= 'z' && (s[1] == '.' || s[1] == ')') &&
        (s.size() == 2 || s[2] == ' ' || s[2] == '\t')) {
        return trim(s.substr(2));
    }
    if (i > 0 && i < s.size() && (s[i] == '.' || s[i] == ')')) return trim(s.substr(i + 1));
    return std::nullopt;
}

// Strips "Step 3", "Step 3:", "**Step 3:**" and similar.
std::optional<std::string_view> strip_step_label(std::string_view s) {
    if (!starts_with_icase(s, "step")) return std::nullopt;
    std::size_t i = 4;
    while (i < s.size() && s[i] == ' ') ++i;
    const std::size_t digits = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == digits) return std::nullopt;
    while (i < s.size() && (s[i] == ':' || s[i] == '.' || s[i] == ')' || s[i] == '-' || s[i] == '*')) {
        ++i;
    }
    return trim(s.substr(i));
}

// Returns the step content when the line starts with a step marker.
std::optional<std::string> step_content(std::string_view line) {
    std::string_view s = strip_bold(line);
    bool marked = false;
    for (int guard = 0; guard < 4; ++guard) {
        s = strip_bold(s);
        const std::string_view unbulleted = strip_bullet(s);
        if (unbulleted.size() != s.size()) {
            s = unbulleted;
            marked = true;
            continue;
        }
        if (auto rest = strip_step_label(s)) {
            s = *rest;
            marked = true;
            continue;
        }
        if (auto rest = strip_ordinal(s)) {
            s = *rest;
            marked = true;
            continue;
        }
        break;
    }
    if (!marked) return std::nullopt;
    return std::string(s);
}

bool is_step_header(std::string_view line) {
    std::string lowered = core::to_lower_ascii(line);
    for (char& c : lowered) {
        if (c == '-') c = ' ';
    }
    return lowered.find("step by step reasoning") != std::string::npos;
}

bool is_answer_line(std::string_view line) {
    std::string_view s = strip_bold(strip_bullet(strip_bold(line)));
    if (auto rest = strip_ordinal(s)) s = *rest;
    s = strip_bold(strip_bullet(s));
    return starts_with_icase(s, "answer") || starts_with_icase(s, "final answer");
}

bool only_ellipsis(std::string_view s) {
    for (char c : s) {
        if (c != '.' && c != ' ') return false;
    }
    return true;
}

std::optional<std::string> extract_answer(std::string_view raw) {
    const auto open = raw.find(kAnsToken);
    if (open == std::string_view::npos) return std::nullopt;
    const auto body_start = open + kAnsToken.size();
    auto close = raw.find(kAnsToken, body_start);
    const auto alt_close = raw.find(kAnsCloseToken, body_start);
    if (alt_close != std::string_view::npos && (close == std::string_view::npos || alt_close < close)) {
        close = alt_close;
    }
    if (close == std::string_view::npos) return std::nullopt;
    return std::string(trim(raw.substr(body_start, close - body_start)));
}

}  // namespace

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Ok: return "ok";
        case Verdict::NotAQuestion: return "not_a_question";
        case Verdict::Unnatural: return "unnatural";
    }
    return "unknown";
}

CoTTrace parse_cot_response(std::string_view raw) {
    CoTTrace trace;
    trace.raw = std::string(raw);
    const auto lines = core::split_lines(raw);

    std::optional<std::size_t> header;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (is_step_header(lines[i])) {
            header = i;
            break;
        }
    }

    // Verdict phrases are only honoured in the section-1 block, so a model that
    // quotes the instructions later on does not trip them.
    std::string section_one;
    const std::size_t section_end = header.value_or(lines.size());
    for (std::size_t i = 0; i < section_end; ++i) {
        section_one.append(lines[i]);
        section_one.push_back('\n');
    }
    if (contains_icase(section_one, "not a question")) {
        trace.verdict = Verdict::NotAQuestion;
    } else if (contains_icase(section_one, "question unnatural")) {
        trace.verdict = Verdict::Unnatural;
    }

    if (header) {
        bool awaiting_text = false;
        for (std::size_t i = *header + 1; i < lines.size(); ++i) {
            const std::string_view line = lines[i];
            if (trim(line).empty()) continue;
            if (is_answer_line(line)) break;
            if (auto content = step_content(line)) {
                if (only_ellipsis(*content) && !content->empty()) continue;
                trace.steps.push_back(std::move(*content));
                awaiting_text = trace.steps.back().empty();
            } else if (awaiting_text) {
                trace.steps.back() = std::string(trim(line));
                awaiting_text = false;
            }
        }
    }
    trace.answer = extract_answer(raw);

    if (trace.verdict != Verdict::Ok) {
        trace.steps.clear();
    } else {
        std::string reason;
        if (!header) reason = "no step-by-step reasoning block";
        if (!trace.answer) reason += (reason.empty() ? "" : "; ") + std::string("answer missing");
        if (!reason.empty()) trace.degraded = std::move(reason);
    }
    return trace;
}

CoTTrace parse_cot_response_strict(std::string_view raw) {
    CoTTrace trace = parse_cot_response(raw);
    if (trace.degraded) {
        auto what = "degraded CoT response: " + *trace.degraded;
        throw ParseDegraded(std::move(what), std::move(trace));
    }
    return trace;
}

int count_reasoning_steps(const CoTTrace& trace) {
    if (trace.verdict != Verdict::Ok) return 0;
    return static_cast<int>(trace.steps.size());
}

std::string render_cot_response(Verdict verdict, const std::vector<std::string>& steps,
                                const std::optional<std::string>& answer) {
    if (verdict == Verdict::NotAQuestion) return "1. The sentence is not a question.\n";
    std::string out;
    if (verdict == Verdict::Unnatural) {
        out += "1. Question unnatural\n";
    } else {
        out += "1. The sentence is a question and it is clear and grammatical.\n";
    }
    out += "2. Step by step reasoning:\n";
    for (std::size_t i = 0; i < steps.size(); ++i) {
        out += "   - Step " + std::to_string(i + 1) + ": " + steps[i] + "\n";
    }
    if (answer) out += "3. Answer: <ans> " + *answer + " <ans>\n";
    return out;
}

DirectEvalScores parse_direct_eval_response(std::string_view raw) {
    static const std::regex kLine(
        R"(^[\s\-*#]*(naturalness|fluency|answerability|complexity)\s*\**\s*:\s*\**\s*(\S*))",
        std::regex::icase);
    std::array<std::optional<int>, 3> values{};
    for (const auto line : core::split_lines(raw)) {
        std::cmatch m;
        const std::string owned(line);
        if (!std::regex_search(owned.c_str(), m, kLine)) continue;
        const std::string label = core::to_lower_ascii(m[1].str());
        const std::size_t slot = (label == "answerability") ? 1 : (label == "complexity") ? 2 : 0;
        if (values[slot]) continue;

        std::string token = m[2].str();
        while (!token.empty() && (token.back() == '*' || token.back() == ',' || token.back() == ';')) {
            token.pop_back();
        }
        if (auto slash = token.find('/'); slash != std::string::npos) token.resize(slash);
        int value = 0;
        const char* first = token.data();
        const char* last = token.data() + token.size();
        if (!token.empty() && *first == '+') ++first;
        auto [end, ec] = std::from_chars(first, last, value);
        if (token.empty() || ec != std::errc() || end != last) {
            throw ParseFailed("DirectEval line for '" + label + "' has no integer rating: '" +
                              std::string(trim(line)) + "'");
        }
        if (value < 0 || value > 2) {
            throw OutOfRange("DirectEval " + label + " rating " + std::to_string(value) +
                             " is outside 0-2");
        }
        values[slot] = value;
    }
    static constexpr std::array<std::string_view, 3> kNames = {"Naturalness", "Answerability",
                                                               "Complexity"};
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!values[i]) throw ParseFailed("DirectEval response lacks a '" + std::string(kNames[i]) + ":' line");
    }
    return {*values[0], *values[1], *values[2]};
}

}  // namespace naco::parse
