#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <future>
#include <memory>
#include <mutex>
#include <optional>
#include <semaphore>
#include <string>
#include <unordered_map>

#include "naco/llm/cache.hpp"
#include "naco/llm/provider.hpp"

namespace naco::llm {

struct GatewayLimits {
    int max_concurrent_requests = 4;
    int max_retries = 3;  // retries after the first attempt
    std::chrono::milliseconds initial_backoff{500};
    double backoff_multiplier = 2.0;
    std::chrono::milliseconds max_backoff{30'000};
    double requests_per_minute = 0.0;  // 0 = unpaced
    std::size_t request_budget = 0;    // total provider attempts allowed, 0 = unlimited
};

struct GatewayCounters {
    std::size_t provider_invocations = 0;  // attempts, including retries
    std::size_t cache_hits = 0;
    std::size_t cache_misses = 0;
    std::size_t retries = 0;
};

/// Front door to a provider: bounded concurrency, pacing, a request budget,
/// retry with exponential backoff, and an optional write-once disk cache.
class Gateway {
public:
    Gateway(std::shared_ptr<Provider> provider, GatewayLimits limits,
            std::optional<ResponseCache> cache = std::nullopt);

    /// Calls the provider directly, retrying transient failures.
    std::string complete(const CompletionRequest& request);

    /// Serves from cache when possible; on a miss calls complete() and persists
    /// the response. Concurrent identical requests share a single provider call.
    std::string cached_complete(const CompletionRequest& request,
                                std::string_view template_version = {});

    GatewayCounters counters() const;
    const std::optional<ResponseCache>& cache() const { return cache_; }

private:
    std::string attempt(const CompletionRequest& request);
    void pace();

    std::shared_ptr<Provider> provider_;
    GatewayLimits limits_;
    std::optional<ResponseCache> cache_;
    std::counting_semaphore<> slots_;

    std::mutex pace_mutex_;
    std::chrono::steady_clock::time_point next_slot_{};

    std::mutex inflight_mutex_;
    std::unordered_map<std::string, std::shared_future<std::string>> inflight_;

    std::atomic<std::size_t> invocations_{0};
    std::atomic<std::size_t> hits_{0};
    std::atomic<std::size_t> misses_{0};
    std::atomic<std::size_t> retries_{0};
};

}  // namespace naco::llm
