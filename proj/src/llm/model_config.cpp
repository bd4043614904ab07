#include "naco/llm/model_config.hpp"

#include <charconv>

#include "naco/core/errors.hpp"
#include "naco/llm/sha256.hpp"

namespace naco::llm {

namespace {

void append_field(std::string& out, std::string_view tag, std::string_view value) {
    out.append(tag);
    out.push_back(':');
    out.append(std::to_string(value.size()));
    out.push_back(':');
    out.append(value);
    out.push_back(';');
}

std::string format_temperature(const std::optional<double>& temperature) {
    if (!temperature) return "default";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), *temperature);
    return std::string(buf, end);
}

}  // namespace

void ModelConfig::validate() const {
    if (temperature && !(*temperature >= 0.0)) {
        throw PreconditionError("model config: temperature must be >= 0");
    }
    if (max_output_tokens <= 0) {
        throw PreconditionError("model config: max_output_tokens must be > 0");
    }
}

std::string canonical_serialization(const CompletionRequest& request) {
    std::string out = "naco-completion-v1;";
    append_field(out, "provider", request.config.provider_id);
    append_field(out, "model", request.config.model_name);
    append_field(out, "temperature", format_temperature(request.config.temperature));
    append_field(out, "prompt", request.prompt);
    append_field(out, "run", std::to_string(request.run_index));
    return out;
}

CacheKey make_cache_key(const CompletionRequest& request) {
    return CacheKey{sha256_hex(canonical_serialization(request))};
}

}  // namespace naco::llm
