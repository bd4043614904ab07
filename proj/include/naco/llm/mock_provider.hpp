#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "naco/llm/provider.hpp"

namespace naco::llm {

/// Entry of a substring manifest. The first entry (in file order) whose
/// substring occurs in the prompt, and whose run_index matches when given, wins.
struct FixtureRule {
    std::string match;
    std::string response;
    std::optional<std::uint32_t> run_index;
};

/// Deterministic offline provider answering from fixtures, instrumented so tests
/// can observe invocation counts and peak concurrency.
///
/// Fixtures are either a directory of `<digest>.txt` files (keyed by the request's
/// CacheKey) or a JSON manifest `{"entries": [{"match", "response", "run_index"?}]}`.
/// A directory may hold both; digest files take precedence over `manifest.json`.
class MockProvider final : public Provider {
public:
    MockProvider() = default;
    explicit MockProvider(const std::filesystem::path& fixtures);

    void add_digest_fixture(std::string digest, std::string response);
    void add_rule(FixtureRule rule);
    void load_manifest(const std::filesystem::path& manifest);

    /// Makes every call sleep, so tests can provoke overlapping requests.
    void set_latency(std::chrono::milliseconds latency) { latency_ = latency; }

    std::string complete(const CompletionRequest& request) override;

    std::size_t invocations() const { return invocations_.load(); }
    std::size_t max_in_flight() const { return max_in_flight_.load(); }
    void reset_counters();

private:
    std::unordered_map<std::string, std::string> by_digest_;
    std::vector<FixtureRule> rules_;
    std::chrono::milliseconds latency_{0};
    std::atomic<std::size_t> invocations_{0};
    std::atomic<std::size_t> in_flight_{0};
    std::atomic<std::size_t> max_in_flight_{0};
};

}  // namespace naco::llm
