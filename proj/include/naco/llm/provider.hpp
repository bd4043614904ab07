#pragma once

#include <string>

#include "naco/core/errors.hpp"
#include "naco/llm/model_config.hpp"

namespace naco::llm {

/// A failure the gateway may retry: HTTP 429, 5xx, or a transport error.
class TransientError : public ProviderError {
public:
    TransientError(std::string what, bool rate_limited)
        : ProviderError(std::move(what)), rate_limited_(rate_limited) {}
    bool rate_limited() const { return rate_limited_; }

private:
    bool rate_limited_;
};

/// One chat-completion backend. Implementations send a single user message and
/// return the text of the reply. They must be safe to call concurrently.
class Provider {
public:
    virtual ~Provider() = default;
    virtual std::string complete(const CompletionRequest& request) = 0;
};

}  // namespace naco::llm
