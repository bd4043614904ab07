#include "naco/app/batch.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace naco::app {

std::vector<std::exception_ptr> run_jobs(std::size_t count, int workers,
                                         const std::function<void(std::size_t)>& job) {
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                job(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const auto n = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, workers)));
    if (n <= 1) {
        worker();
        return errors;
    }
    {
        std::vector<std::jthread> pool;
        pool.reserve(n);
        for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
    }
    return errors;
}

}  // namespace naco::app
