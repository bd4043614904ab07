#include "naco/app/run_config.hpp"

#include <algorithm>
#include <cstdlib>

#include <json.hpp>

#include "naco/core/errors.hpp"
#include "naco/core/text.hpp"
#include "naco/io/csv.hpp"

namespace naco::app {

using json = nlohmann::json;

namespace {

std::string canonical_key(std::string key) {
    std::replace(key.begin(), key.end(), '-', '_');
    return core::to_lower_ascii(key);
}

long long to_integer(const std::string& key, const std::string& value) {
    const auto v = io::parse_number(value);
    if (!v || *v != static_cast<double>(static_cast<long long>(*v))) {
        throw PreconditionError("setting '" + key + "' expects an integer, got '" + value + "'");
    }
    return static_cast<long long>(*v);
}

double to_real(const std::string& key, const std::string& value) {
    const auto v = io::parse_number(value);
    if (!v) throw PreconditionError("setting '" + key + "' expects a number, got '" + value + "'");
    return *v;
}

bool to_bool(const std::string& key, const std::string& value) {
    const auto v = core::to_lower_ascii(value);
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    throw PreconditionError("setting '" + key + "' expects a boolean, got '" + value + "'");
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= value.size()) {
        auto comma = value.find(',', start);
        if (comma == std::string::npos) comma = value.size();
        const auto item = core::trim(std::string_view(value).substr(start, comma - start));
        if (!item.empty()) out.emplace_back(item);
        start = comma + 1;
    }
    return out;
}

struct ProviderDefaults {
    const char* endpoint;
    const char* credential;
};

const std::map<std::string, ProviderDefaults>& provider_defaults() {
    static const std::map<std::string, ProviderDefaults> kDefaults = {
        {"openai", {"https://api.openai.com/v1/chat/completions", "OPENAI_API_KEY"}},
        {"anthropic", {"https://api.anthropic.com/v1/messages", "ANTHROPIC_API_KEY"}},
        {"mistral", {"https://api.mistral.ai/v1/chat/completions", "MISTRAL_API_KEY"}},
    };
    return kDefaults;
}

}  // namespace

const std::vector<std::string>& setting_keys() {
    static const std::vector<std::string> kKeys = {
        "examples", "manifest", "candidates", "profile", "cache", "no_cache", "out",
        "mock_fixtures", "runs", "seed", "parallelism", "provider", "model", "endpoint",
        "credential_env", "temperature", "max_tokens", "scale", "mode", "weights", "zeroing",
        "averaging", "requery_degraded", "calibration_sample", "override_expected_from_reference",
        "append_reference", "retries", "backoff_ms", "requests_per_minute", "request_budget",
        "max_concurrency", "metric", "references", "ingest", "metric_name", "scores", "ratings",
        "groups", "reference_metric", "disagreement_pairs"};
    return kKeys;
}

void apply_setting(RunConfig& c, const std::string& raw_key, const std::string& value) {
    const std::string key = canonical_key(raw_key);
    if (key == "examples") c.examples = value;
    else if (key == "manifest") c.manifest = value;
    else if (key == "candidates") c.candidates = value;
    else if (key == "profile") c.profile = value;
    else if (key == "cache") c.cache_root = value;
    else if (key == "no_cache") c.use_cache = !to_bool(key, value);
    else if (key == "out") c.out = value;
    else if (key == "mock_fixtures") c.mock_fixtures = value;
    else if (key == "runs") c.score.runs = static_cast<int>(to_integer(key, value));
    else if (key == "seed") c.seed = static_cast<std::uint64_t>(to_integer(key, value));
    else if (key == "parallelism") c.parallelism = static_cast<int>(to_integer(key, value));
    else if (key == "provider") {
        c.model.provider_id = value;
        if (auto it = provider_defaults().find(value); it != provider_defaults().end()) {
            if (c.model.endpoint.empty()) c.model.endpoint = it->second.endpoint;
            if (c.model.credential_ref.empty()) c.model.credential_ref = it->second.credential;
        }
    }
    else if (key == "model") c.model.model_name = value;
    else if (key == "endpoint") c.model.endpoint = value;
    else if (key == "credential_env") c.model.credential_ref = value;
    else if (key == "temperature") {
        if (value.empty() || core::to_lower_ascii(value) == "default") c.model.temperature.reset();
        else c.model.temperature = to_real(key, value);
    }
    else if (key == "max_tokens") c.model.max_output_tokens = static_cast<int>(to_integer(key, value));
    else if (key == "scale") {
        if (value == "unit") c.score.display_scale = scoring::DisplayScale::Unit;
        else if (value == "percent") c.score.display_scale = scoring::DisplayScale::Percent;
        else throw PreconditionError("--scale must be 'unit' or 'percent'");
    }
    else if (key == "mode") {
        if (value != "cot-qa" && value != "direct-eval") {
            throw PreconditionError("--mode must be 'cot-qa' or 'direct-eval'");
        }
        c.mode = value;
    }
    else if (key == "weights") {
        const auto parts = split_list(value);
        if (parts.size() != 3) throw PreconditionError("--weights expects three comma-separated numbers");
        c.score.weights = {to_real(key, parts[0]), to_real(key, parts[1]), to_real(key, parts[2])};
    }
    else if (key == "zeroing") {
        if (value == "either") c.score.zeroing = scoring::ZeroingRule::Either;
        else if (value == "both") c.score.zeroing = scoring::ZeroingRule::Both;
        else throw PreconditionError("--zeroing must be 'either' or 'both'");
    }
    else if (key == "averaging") {
        if (value == "runs") c.score.averaging = scoring::RunAveraging::MeanOfRunScores;
        else if (value == "components") c.score.averaging = scoring::RunAveraging::ScoreOfMeanComponents;
        else throw PreconditionError("--averaging must be 'runs' or 'components'");
    }
    else if (key == "requery_degraded") c.score.requery_degraded = to_bool(key, value);
    else if (key == "calibration_sample") c.calibration_sample = static_cast<int>(to_integer(key, value));
    else if (key == "override_expected_from_reference") c.override_expected_from_reference = to_bool(key, value);
    else if (key == "append_reference") c.append_reference = to_bool(key, value);
    else if (key == "retries") c.limits.max_retries = static_cast<int>(to_integer(key, value));
    else if (key == "backoff_ms") c.limits.initial_backoff = std::chrono::milliseconds(to_integer(key, value));
    else if (key == "requests_per_minute") c.limits.requests_per_minute = to_real(key, value);
    else if (key == "request_budget") c.limits.request_budget = static_cast<std::size_t>(to_integer(key, value));
    else if (key == "max_concurrency") c.limits.max_concurrent_requests = static_cast<int>(to_integer(key, value));
    else if (key == "metric") c.metric = value;
    else if (key == "references") c.references = value;
    else if (key == "ingest") c.ingest = value;
    else if (key == "metric_name") c.metric_name = value;
    else if (key == "scores") c.scores = split_list(value);
    else if (key == "ratings") c.ratings = value;
    else if (key == "groups") c.groups = value;
    else if (key == "reference_metric") c.reference_metric = value;
    else if (key == "disagreement_pairs") c.disagreement_pairs = static_cast<int>(to_integer(key, value));
    else throw PreconditionError("unknown setting '" + raw_key + "'");
}

void RunConfig::validate() const {
    model.validate();
    score.validate();
    if (parallelism < 1) throw PreconditionError("parallelism must be >= 1");
    if (calibration_sample < 1) throw PreconditionError("calibration_sample must be >= 1");
    if (limits.max_retries < 0) throw PreconditionError("retries must be >= 0");
    if (!use_cache && model.provider_id != "mock") {
        throw PreconditionError("the response cache is mandatory for live providers");
    }
}

Settings load_config_file(const std::string& path) {
    json doc;
    try {
        doc = json::parse(io::read_text_file(path));
    } catch (const json::exception& e) {
        throw PreconditionError("config file " + path + ": " + e.what());
    }
    if (!doc.is_object()) throw PreconditionError("config file " + path + " must be a JSON object");
    Settings out;
    for (const auto& [key, value] : doc.items()) {
        if (value.is_string()) {
            out[canonical_key(key)] = value.get<std::string>();
        } else if (value.is_array()) {
            std::string joined;
            for (const auto& e : value) {
                if (!joined.empty()) joined += ",";
                joined += e.is_string() ? e.get<std::string>() : e.dump();
            }
            out[canonical_key(key)] = joined;
        } else {
            out[canonical_key(key)] = value.dump();
        }
    }
    return out;
}

Settings settings_from_environment() {
    Settings out;
    for (const auto& key : setting_keys()) {
        std::string name = "NACO_" + key;
        std::transform(name.begin(), name.end(), name.begin(),
                       [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
        if (const char* value = std::getenv(name.c_str())) out[key] = value;
    }
    return out;
}

RunConfig resolve_config(const Settings& flags) {
    Settings merged;
    std::string config_path;
    if (auto it = flags.find("config"); it != flags.end()) {
        config_path = it->second;
    } else if (const char* env = std::getenv("NACO_CONFIG")) {
        config_path = env;
    }
    if (!config_path.empty()) {
        for (auto& [k, v] : load_config_file(config_path)) merged[k] = v;
    }
    for (auto& [k, v] : settings_from_environment()) merged[k] = v;
    for (const auto& [k, v] : flags) {
        if (k != "config") merged[canonical_key(k)] = v;
    }

    RunConfig config;
    // Provider first so explicit endpoint / credential settings override its defaults.
    if (auto it = merged.find("provider"); it != merged.end()) apply_setting(config, it->first, it->second);
    for (const auto& [k, v] : merged) {
        if (k != "provider") apply_setting(config, k, v);
    }
    config.validate();
    return config;
}

}  // namespace naco::app
