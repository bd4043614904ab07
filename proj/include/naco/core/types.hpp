#pragma once

#include <optional>
#include <string>
#include <vector>

namespace naco {

/// One benchmark item: the context passage(s), the gold answer the question
/// must target, optional clue words and the human reference question.
struct QGExample {
    std::string id;
    std::vector<std::string> passages;  // 1 (SQuAD-like) or 2 (HotpotQA-like)
    std::string answer;
    std::vector<std::string> clues;
    std::optional<std::string> reference_question;
    std::string dataset_id;
};

/// A question under evaluation, tagged with the system (or study group) that produced it.
struct CandidateQuestion {
    std::string example_id;
    std::string text;
    std::string system;
};

}  // namespace naco
