#pragma once

#include <chrono>
#include <string>

#include "naco/llm/provider.hpp"

namespace naco::llm {

enum class WireFormat {
    OpenAiChat,         // POST {model, messages:[{role:user}]} -> choices[0].message.content
    AnthropicMessages,  // POST {model, max_tokens, messages} -> content[].text
};

/// Chat-completion adapter over HTTP(S). The endpoint in ModelConfig is the full
/// URL of the completion route; the bearer credential is read from the
/// environment variable named by ModelConfig::credential_ref at call time.
///
/// Status mapping: 401/403 -> AuthError, 429 -> TransientError (rate limited),
/// 5xx and transport failures -> TransientError, other non-2xx -> ProviderError.
class HttpChatProvider final : public Provider {
public:
    explicit HttpChatProvider(WireFormat format,
                              std::chrono::seconds timeout = std::chrono::seconds(120));

    std::string complete(const CompletionRequest& request) override;

    /// Wire format conventionally used by a provider id ("anthropic" or anything
    /// OpenAI-compatible).
    static WireFormat format_for(const std::string& provider_id);

private:
    WireFormat format_;
    std::chrono::seconds timeout_;
};

}  // namespace naco::llm
