#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace naco::llm {

/// Which chat-completion provider to use and how to reach it. Temperature is
/// optional: unset means the provider's own default is used.
struct ModelConfig {
    std::string provider_id = "mock";
    std::string model_name = "mock-model";
    std::optional<double> temperature;
    int max_output_tokens = 1024;
    std::string endpoint;
    std::string credential_ref;  // name of the environment variable holding the key

    /// Throws PreconditionError when temperature < 0 or max_output_tokens <= 0.
    void validate() const;
};

struct CompletionRequest {
    ModelConfig config;
    std::string prompt;
    std::uint32_t run_index = 0;
};

struct CacheKey {
    std::string digest;  // 64 lowercase hex chars

    friend bool operator==(const CacheKey&, const CacheKey&) = default;
};

/// Injective byte serialization of the fields that identify a completion:
/// provider, model, temperature, prompt bytes and run index. Every field is
/// length-prefixed so no two distinct field tuples serialize identically.
std::string canonical_serialization(const CompletionRequest& request);

CacheKey make_cache_key(const CompletionRequest& request);

}  // namespace naco::llm
