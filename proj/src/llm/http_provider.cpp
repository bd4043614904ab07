#include "naco/llm/http_provider.hpp"

#include <cstdlib>

#include <httplib.h>
#include <json.hpp>

namespace naco::llm {

using json = nlohmann::json;

namespace {

struct Url {
    std::string origin;  // scheme://host[:port]
    std::string path;
};

Url split_url(const std::string& url) {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) throw ProviderError("endpoint is not an absolute URL: " + url);
    const auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {url, "/"};
    return {url.substr(0, path_start), url.substr(path_start)};
}

std::string resolve_credential(const ModelConfig& config) {
    if (config.credential_ref.empty()) return {};
    const char* value = std::getenv(config.credential_ref.c_str());
    if (value == nullptr || *value == '\0') {
        throw AuthError("credential environment variable '" + config.credential_ref + "' is not set");
    }
    return value;
}

json request_body(const CompletionRequest& request) {
    json body = {{"model", request.config.model_name},
                 {"messages", json::array({{{"role", "user"}, {"content", request.prompt}}})},
                 {"max_tokens", request.config.max_output_tokens}};
    if (request.config.temperature) body["temperature"] = *request.config.temperature;
    return body;
}

std::string extract_text(WireFormat format, const json& reply) {
    if (format == WireFormat::OpenAiChat) {
        const auto& content = reply.at("choices").at(0).at("message").at("content");
        return content.is_null() ? std::string() : content.get<std::string>();
    }
    std::string text;
    for (const auto& block : reply.at("content")) {
        if (block.value("type", "text") == "text") text += block.at("text").get<std::string>();
    }
    return text;
}

}  // namespace

HttpChatProvider::HttpChatProvider(WireFormat format, std::chrono::seconds timeout)
    : format_(format), timeout_(timeout) {}

WireFormat HttpChatProvider::format_for(const std::string& provider_id) {
    return provider_id == "anthropic" ? WireFormat::AnthropicMessages : WireFormat::OpenAiChat;
}

std::string HttpChatProvider::complete(const CompletionRequest& request) {
    const std::string credential = resolve_credential(request.config);
    const Url url = split_url(request.config.endpoint);

    httplib::Client client(url.origin);
    client.set_connection_timeout(timeout_);
    client.set_read_timeout(timeout_);
    client.set_write_timeout(timeout_);

    httplib::Headers headers;
    if (!credential.empty()) {
        if (format_ == WireFormat::AnthropicMessages) {
            headers.emplace("x-api-key", credential);
        } else {
            headers.emplace("Authorization", "Bearer " + credential);
        }
    }
    if (format_ == WireFormat::AnthropicMessages) headers.emplace("anthropic-version", "2023-06-01");

    auto result = client.Post(url.path, headers, request_body(request).dump(),
                              "application/json");
    if (!result) {
        throw TransientError("transport error contacting " + url.origin + ": " +
                                 httplib::to_string(result.error()),
                             false);
    }
    const int status = result->status;
    if (status == 401 || status == 403) {
        throw AuthError("provider rejected credential (HTTP " + std::to_string(status) + ")");
    }
    if (status == 429) throw TransientError("provider rate limited the request (HTTP 429)", true);
    if (status >= 500) throw TransientError("provider error HTTP " + std::to_string(status), false);
    if (status < 200 || status >= 300) {
        throw ProviderError("provider returned HTTP " + std::to_string(status) + ": " +
                            result->body.substr(0, 512));
    }
    try {
        return extract_text(format_, json::parse(result->body));
    } catch (const json::exception& e) {
        throw ProviderError(std::string("unexpected provider response shape: ") + e.what());
    }
}

}  // namespace naco::llm
