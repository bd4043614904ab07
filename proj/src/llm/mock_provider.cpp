#include "naco/llm/mock_provider.hpp"

#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace naco::llm {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read fixture file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

MockProvider::MockProvider(const fs::path& fixtures) {
    if (fs::is_directory(fixtures)) {
        for (const auto& entry : fs::directory_iterator(fixtures)) {
            if (entry.is_regular_file() && entry.path().extension() == ".txt") {
                by_digest_.emplace(entry.path().stem().string(), read_file(entry.path()));
            }
        }
        if (fs::exists(fixtures / "manifest.json")) load_manifest(fixtures / "manifest.json");
    } else if (fs::is_regular_file(fixtures)) {
        load_manifest(fixtures);
    } else {
        throw Error("mock fixtures not found: " + fixtures.string());
    }
}

void MockProvider::add_digest_fixture(std::string digest, std::string response) {
    by_digest_.insert_or_assign(std::move(digest), std::move(response));
}

void MockProvider::add_rule(FixtureRule rule) { rules_.push_back(std::move(rule)); }

void MockProvider::load_manifest(const fs::path& manifest) {
    json doc;
    try {
        doc = json::parse(read_file(manifest));
    } catch (const json::exception& e) {
        throw Error("malformed fixture manifest " + manifest.string() + ": " + e.what());
    }
    const json& entries = doc.is_array() ? doc : doc.value("entries", json::array());
    for (const auto& e : entries) {
        if (!e.contains("match") || !e.contains("response")) {
            throw Error("fixture manifest entry lacks 'match' or 'response' in " + manifest.string());
        }
        FixtureRule rule{e.at("match").get<std::string>(), e.at("response").get<std::string>(), {}};
        if (e.contains("run_index")) rule.run_index = e.at("run_index").get<std::uint32_t>();
        rules_.push_back(std::move(rule));
    }
}

std::string MockProvider::complete(const CompletionRequest& request) {
    ++invocations_;
    const auto now = ++in_flight_;
    auto peak = max_in_flight_.load();
    while (now > peak && !max_in_flight_.compare_exchange_weak(peak, now)) {
    }
    struct Leave {
        std::atomic<std::size_t>& counter;
        ~Leave() { --counter; }
    } leave{in_flight_};

    if (latency_.count() > 0) std::this_thread::sleep_for(latency_);

    const CacheKey key = make_cache_key(request);
    if (auto it = by_digest_.find(key.digest); it != by_digest_.end()) return it->second;
    for (const auto& rule : rules_) {
        if (rule.run_index && *rule.run_index != request.run_index) continue;
        if (request.prompt.find(rule.match) != std::string::npos) return rule.response;
    }
    throw FixtureMissing("no mock fixture for key " + key.digest);
}

void MockProvider::reset_counters() {
    invocations_ = 0;
    max_in_flight_ = 0;
}

}  // namespace naco::llm
