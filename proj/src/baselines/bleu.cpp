#include "naco/baselines/bleu.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>

#include "naco/core/errors.hpp"

namespace naco::baselines {

namespace {

using NgramCounts = std::map<std::vector<std::string>, long long>;

NgramCounts count_ngrams(std::span<const std::string> tokens, std::size_t n) {
    NgramCounts counts;
    if (tokens.size() < n) return counts;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
        ++counts[std::vector<std::string>(tokens.begin() + i, tokens.begin() + i + n)];
    }
    return counts;
}

}  // namespace

std::vector<std::string> tokenize_for_overlap(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) tokens.push_back(std::move(current));
        current.clear();
    };
    for (char c : text) {
        const auto uc = static_cast<unsigned char>(c);
        if (std::isspace(uc)) {
            flush();
        } else if (std::ispunct(uc)) {
            flush();
            tokens.emplace_back(1, c);
        } else {
            current.push_back(static_cast<char>(std::tolower(uc)));
        }
    }
    flush();
    return tokens;
}

BleuStats& BleuStats::operator+=(const BleuStats& other) {
    for (std::size_t n = 0; n < 4; ++n) {
        matches[n] += other.matches[n];
        totals[n] += other.totals[n];
    }
    hypothesis_length += other.hypothesis_length;
    reference_length += other.reference_length;
    return *this;
}

BleuStats bleu_stats(std::span<const std::string> hypothesis,
                     std::span<const std::vector<std::string>> references) {
    if (references.empty()) throw PreconditionError("BLEU needs at least one reference");
    BleuStats stats;
    for (std::size_t n = 1; n <= 4; ++n) {
        const NgramCounts hyp = count_ngrams(hypothesis, n);
        NgramCounts max_ref;
        for (const auto& ref : references) {
            for (const auto& [gram, count] : count_ngrams(ref, n)) {
                auto& slot = max_ref[gram];
                slot = std::max(slot, count);
            }
        }
        long long matched = 0;
        long long total = 0;
        for (const auto& [gram, count] : hyp) {
            total += count;
            if (auto it = max_ref.find(gram); it != max_ref.end()) matched += std::min(count, it->second);
        }
        stats.matches[n - 1] = matched;
        stats.totals[n - 1] = std::max<long long>(1, total);
    }
    const auto hyp_len = static_cast<long long>(hypothesis.size());
    stats.hypothesis_length = hyp_len;
    long long closest = static_cast<long long>(references.front().size());
    for (const auto& ref : references) {
        const auto len = static_cast<long long>(ref.size());
        const auto d = std::llabs(len - hyp_len);
        const auto best = std::llabs(closest - hyp_len);
        if (d < best || (d == best && len < closest)) closest = len;
    }
    stats.reference_length = closest;
    return stats;
}

double bleu_from_stats(const BleuStats& stats) {
    if (stats.matches[0] == 0) return 0.0;
    double log_sum = std::log(static_cast<double>(stats.matches[0]) /
                              static_cast<double>(stats.totals[0]));
    for (std::size_t n = 1; n < 4; ++n) {
        log_sum += std::log(static_cast<double>(stats.matches[n] + 1) /
                            static_cast<double>(stats.totals[n] + 1));
    }
    double brevity = 1.0;
    if (stats.hypothesis_length <= stats.reference_length) {
        if (stats.hypothesis_length == 0) return 0.0;
        brevity = std::exp(1.0 - static_cast<double>(stats.reference_length) /
                                     static_cast<double>(stats.hypothesis_length));
    }
    return brevity * std::exp(0.25 * log_sum);
}

double bleu4(std::string_view candidate, std::span<const std::string> references) {
    std::vector<std::vector<std::string>> refs;
    refs.reserve(references.size());
    for (const auto& r : references) refs.push_back(tokenize_for_overlap(r));
    const auto hyp = tokenize_for_overlap(candidate);
    return bleu_from_stats(bleu_stats(hyp, refs));
}

double corpus_bleu4(std::span<const std::string> candidates,
                    std::span<const std::vector<std::string>> references) {
    if (candidates.size() != references.size()) {
        throw PreconditionError("corpus BLEU needs one reference list per candidate");
    }
    BleuStats total;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        std::vector<std::vector<std::string>> refs;
        for (const auto& r : references[i]) refs.push_back(tokenize_for_overlap(r));
        total += bleu_stats(tokenize_for_overlap(candidates[i]), refs);
    }
    return bleu_from_stats(total);
}

}  // namespace naco::baselines
