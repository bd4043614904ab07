#include "naco/core/text.hpp"

#include <algorithm>
#include <cctype>

namespace naco::core {

namespace {

bool is_article(std::string_view token) {
    return token == "a" || token == "an" || token == "the";
}

char lower(char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

}  // namespace

TokenBag::TokenBag(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    std::sort(tokens_.begin(), tokens_.end());
}

std::size_t TokenBag::overlap(const TokenBag& other) const {
    // Both sides sorted: a merge walk counts min multiplicities.
    std::size_t shared = 0;
    auto a = tokens_.begin();
    auto b = other.tokens_.begin();
    while (a != tokens_.end() && b != other.tokens_.end()) {
        if (*a < *b) {
            ++a;
        } else if (*b < *a) {
            ++b;
        } else {
            ++shared;
            ++a;
            ++b;
        }
    }
    return shared;
}

TokenBag normalize_text(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    auto flush = [&] {
        if (!current.empty() && !is_article(current)) tokens.push_back(current);
        current.clear();
    };
    for (char c : text) {
        const auto uc = static_cast<unsigned char>(c);
        if (std::isspace(uc)) {
            flush();
        } else if (std::ispunct(uc)) {
            continue;
        } else {
            current.push_back(lower(c));
        }
    }
    flush();
    return TokenBag(std::move(tokens));
}

double token_f1(std::string_view prediction, std::string_view gold) {
    const TokenBag pred = normalize_text(prediction);
    const TokenBag ref = normalize_text(gold);
    if (pred.empty() && ref.empty()) return 1.0;
    if (pred.empty() || ref.empty()) return 0.0;
    const auto shared = static_cast<double>(pred.overlap(ref));
    if (shared == 0.0) return 0.0;
    const double precision = shared / static_cast<double>(pred.size());
    const double recall = shared / static_cast<double>(ref.size());
    return 2.0 * precision * recall / (precision + recall);
}

std::string to_lower_ascii(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), lower);
    return out;
}

std::string_view trim(std::string_view s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(begin, end - begin);
}

bool contains_icase(std::string_view haystack, std::string_view needle) {
    return to_lower_ascii(haystack).find(to_lower_ascii(needle)) != std::string::npos;
}

bool starts_with_icase(std::string_view s, std::string_view prefix) {
    if (s.size() < prefix.size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (lower(s[i]) != lower(prefix[i])) return false;
    }
    return true;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        auto line = text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = nl + 1;
    }
    return lines;
}

}  // namespace naco::core
