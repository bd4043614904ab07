#pragma once

#include <span>
#include <string>
#include <string_view>

namespace naco::baselines {

/// Length of the longest common subsequence of two token sequences.
std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b);

/// ROUGE-L F-measure over tokens (same tokenizer as BLEU). Zero when either
/// side is empty or nothing is shared.
double rouge_l(std::string_view candidate, std::string_view reference);

/// Largest element. Throws EmptyList on an empty input.
double max_over_references(std::span<const double> scores);

}  // namespace naco::baselines
