#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace naco::baselines {

/// Tokenizer shared by the reference-based baselines: ASCII-lowercase, split on
/// whitespace, every punctuation character becomes its own token.
std::vector<std::string> tokenize_for_overlap(std::string_view text);

/// Clipped n-gram counts for orders 1-4 plus the lengths entering the brevity penalty.
struct BleuStats {
    std::array<long long, 4> matches{};
    std::array<long long, 4> totals{};  // per sentence at least 1, as in the usual NLTK accounting
    long long hypothesis_length = 0;
    long long reference_length = 0;     // closest reference length, ties to the shorter

    BleuStats& operator+=(const BleuStats& other);
};

BleuStats bleu_stats(std::span<const std::string> hypothesis,
                     std::span<const std::vector<std::string>> references);

/// BLEU-4 with uniform weights, brevity penalty and add-one smoothing of the
/// order 2-4 precisions. Zero when no unigram matches.
double bleu_from_stats(const BleuStats& stats);

/// Sentence-level BLEU-4 of one candidate against >= 1 references.
double bleu4(std::string_view candidate, std::span<const std::string> references);

/// Corpus-level BLEU-4: statistics are summed over all pairs before combining.
double corpus_bleu4(std::span<const std::string> candidates,
                    std::span<const std::vector<std::string>> references);

}  // namespace naco::baselines
