#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "naco/analysis/ratings.hpp"
#include "naco/core/types.hpp"

namespace naco::io {

/// Describes one benchmark file: its id and the passage count every example must have.
struct DatasetManifest {
    std::string dataset_id;
    std::string examples_path;
    std::optional<int> passage_count;  // 1 (SQuAD-like) or 2 (HotpotQA-like)
    std::string notes;
};

DatasetManifest load_manifest(const std::string& path);

/// Loads a JSON-lines example file. Besides the native layout
///   {id, passages, answer, clues?, reference_question?, dataset_id}
/// two benchmark shapes are normalized on the fly:
///   SQuAD-like    {id, context, question, answers: {text: [...]}} (or "answer")
///   HotpotQA-like {_id, context: [[title, [sentences]]...], supporting_facts, question, answer}
/// Throws SchemaError (with line and field), DuplicateId or PassageCountMismatch.
std::vector<QGExample> load_examples(const std::string& path,
                                     const std::optional<DatasetManifest>& manifest = std::nullopt);

/// Loads {example_id, system, text} lines. Every example_id must name a loaded
/// example (UnknownExampleId otherwise); an empty file is a valid empty set.
std::vector<CandidateQuestion> load_candidates(const std::string& path,
                                               const std::vector<QGExample>& examples);

/// Loads {example_id, system, rater_id, naturalness, answerability, complexity} lines.
std::vector<analysis::HumanRating> load_ratings(const std::string& path);

/// Loads {example_id, references: [...]} lines of additional reference questions.
std::map<std::string, std::vector<std::string>> load_references(const std::string& path);

}  // namespace naco::io
