#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace naco::core {

/// Multiset of normalized answer tokens. Order is not significant; tokens are
/// lowercase, punctuation-free and never an English article.
class TokenBag {
public:
    TokenBag() = default;
    explicit TokenBag(std::vector<std::string> tokens);

    const std::vector<std::string>& tokens() const { return tokens_; }  // sorted
    std::size_t size() const { return tokens_.size(); }
    bool empty() const { return tokens_.empty(); }

    /// Number of tokens shared by both bags, counting per-token minimum multiplicity.
    std::size_t overlap(const TokenBag& other) const;

    friend bool operator==(const TokenBag&, const TokenBag&) = default;

private:
    std::vector<std::string> tokens_;
};

/// SQuAD-style answer normalization: lowercase, strip punctuation, drop
/// "a"/"an"/"the", split on whitespace.
TokenBag normalize_text(std::string_view text);

/// Token-level F1 between a predicted and a gold answer over normalized bags.
/// Both empty -> 1, exactly one empty -> 0.
double token_f1(std::string_view prediction, std::string_view gold);

/// ASCII helpers shared by the parsers.
std::string to_lower_ascii(std::string_view s);
std::string_view trim(std::string_view s);
bool contains_icase(std::string_view haystack, std::string_view needle);
bool starts_with_icase(std::string_view s, std::string_view prefix);
std::vector<std::string_view> split_lines(std::string_view text);

}  // namespace naco::core
