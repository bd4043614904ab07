#include "naco/llm/gateway.hpp"

#include <algorithm>
#include <thread>

namespace naco::llm {

Gateway::Gateway(std::shared_ptr<Provider> provider, GatewayLimits limits,
                 std::optional<ResponseCache> cache)
    : provider_(std::move(provider)),
      limits_(limits),
      cache_(std::move(cache)),
      slots_(std::max(1, limits.max_concurrent_requests)) {
    if (!provider_) throw Error("gateway requires a provider");
}

void Gateway::pace() {
    if (limits_.requests_per_minute <= 0.0) return;
    const auto interval = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(60.0 / limits_.requests_per_minute));
    std::chrono::steady_clock::time_point slot;
    {
        std::lock_guard lock(pace_mutex_);
        const auto now = std::chrono::steady_clock::now();
        slot = std::max(now, next_slot_);
        next_slot_ = slot + interval;
    }
    std::this_thread::sleep_until(slot);
}

std::string Gateway::attempt(const CompletionRequest& request) {
    const auto n = ++invocations_;
    if (limits_.request_budget != 0 && n > limits_.request_budget) {
        --invocations_;
        throw RateLimitExhausted("request budget of " + std::to_string(limits_.request_budget) +
                                 " provider calls is spent");
    }
    pace();
    slots_.acquire();
    struct Release {
        std::counting_semaphore<>& s;
        ~Release() { s.release(); }
    } release{slots_};
    return provider_->complete(request);
}

std::string Gateway::complete(const CompletionRequest& request) {
    request.config.validate();
    auto delay = limits_.initial_backoff;
    for (int tries = 0;; ++tries) {
        try {
            return attempt(request);
        } catch (const TransientError& e) {
            if (tries >= limits_.max_retries) {
                if (e.rate_limited()) {
                    throw RateLimitExhausted(std::string("still rate limited after retries: ") +
                                             e.what());
                }
                throw ProviderError(std::string("giving up after retries: ") + e.what());
            }
        }
        ++retries_;
        std::this_thread::sleep_for(delay);
        const auto next = std::chrono::duration<double, std::milli>(delay) * limits_.backoff_multiplier;
        delay = std::min(limits_.max_backoff,
                         std::chrono::duration_cast<std::chrono::milliseconds>(next));
    }
}

std::string Gateway::cached_complete(const CompletionRequest& request,
                                     std::string_view template_version) {
    if (!cache_) {
        ++misses_;
        return complete(request);
    }
    const CacheKey key = make_cache_key(request);
    if (auto hit = cache_->get(key)) {
        ++hits_;
        return *hit;
    }

    std::promise<std::string> promise;
    std::shared_future<std::string> shared;
    bool owner = false;
    {
        std::lock_guard lock(inflight_mutex_);
        auto it = inflight_.find(key.digest);
        if (it == inflight_.end()) {
            shared = promise.get_future().share();
            inflight_.emplace(key.digest, shared);
            owner = true;
        } else {
            shared = it->second;
        }
    }
    if (!owner) {
        ++hits_;
        return shared.get();
    }

    struct Retire {
        Gateway& g;
        const std::string& digest;
        ~Retire() {
            std::lock_guard lock(g.inflight_mutex_);
            g.inflight_.erase(digest);
        }
    } retire{*this, key.digest};

    try {
        // Another process may have published the entry since the first lookup.
        if (auto hit = cache_->get(key)) {
            ++hits_;
            promise.set_value(*hit);
            return *hit;
        }
        ++misses_;
        std::string response = complete(request);
        if (!cache_->put(key, request, response, template_version)) {
            // Lost a publish race: the stored entry is authoritative.
            if (auto stored = cache_->get(key)) response = std::move(*stored);
        }
        promise.set_value(response);
        return response;
    } catch (...) {
        promise.set_exception(std::current_exception());
        throw;
    }
}

GatewayCounters Gateway::counters() const {
    return {invocations_.load(), hits_.load(), misses_.load(), retries_.load()};
}

}  // namespace naco::llm
