#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <vector>

namespace naco::app {

/// Runs job(i) for i in [0, count) on at most `workers` threads. A throwing job
/// does not stop the others; its exception is returned in its slot.
std::vector<std::exception_ptr> run_jobs(std::size_t count, int workers,
                                         const std::function<void(std::size_t)>& job);

/// Thread-safe sink that stores one result per job index; the only place
/// worker threads publish results.
template <typename T>
class ResultCollector {
public:
    explicit ResultCollector(std::size_t count) : slots_(count) {}

    void put(std::size_t index, T value) {
        std::lock_guard lock(mutex_);
        slots_[index] = std::move(value);
    }

    /// Results in job order; only call once all jobs have finished.
    std::vector<std::optional<T>> take() {
        std::lock_guard lock(mutex_);
        return std::move(slots_);
    }

private:
    std::mutex mutex_;
    std::vector<std::optional<T>> slots_;
};

}  // namespace naco::app
