#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace hsop {

/// Runs body(i) for every i in [0, count). Implementations may run the calls
/// concurrently; callers must not depend on call order.
using ParallelFor = std::function<void(std::size_t count, const std::function<void(std::size_t)>& body)>;

inline ParallelFor sequential_for() {
    return [](std::size_t count, const std::function<void(std::size_t)>& body) {
        for (std::size_t i = 0; i < count; ++i) body(i);
    };
}

/// Work-stealing loop over `workers` threads (at least one). The first
/// exception thrown by any task is rethrown on the calling thread.
inline ParallelFor thread_pool_for(unsigned workers) {
    workers = std::max(1u, workers);
    return [workers](std::size_t count, const std::function<void(std::size_t)>& body) {
        if (workers == 1 || count <= 1) {
            for (std::size_t i = 0; i < count; ++i) body(i);
            return;
        }
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto run = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next.store(count);
                }
            }
        };
        std::vector<std::thread> threads;
        const std::size_t spawn = std::min<std::size_t>(workers, count);
        threads.reserve(spawn);
        for (std::size_t t = 0; t < spawn; ++t) threads.emplace_back(run);
        for (auto& th : threads) th.join();
        if (failure) std::rethrow_exception(failure);
    };
}

inline unsigned default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace hsop
