#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gdrs {

/// Threads to use for `tasks` work items; jobs == 0 means hardware concurrency.
inline unsigned worker_count(std::size_t tasks, unsigned jobs) {
    if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(jobs, tasks)));
}

/// Runs body(task, worker) for every task in [0, tasks). Tasks are handed out
/// dynamically; worker ids are dense in [0, workers), so per-worker state can
/// be sized with `worker_count`. The first exception thrown is rethrown.
template <class Body>
void parallel_for(std::size_t tasks, unsigned workers, Body&& body) {
    if (workers <= 1) {
        for (std::size_t t = 0; t < tasks; ++t) body(t, 0U);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t t = next.fetch_add(1); t < tasks; t = next.fetch_add(1)) body(t, w);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next.store(tasks);
                }
            });
        }
    }
    if (error) std::rethrow_exception(error);
}

}  // namespace gdrs
