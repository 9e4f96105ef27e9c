#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace olab {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Index-parallel loop. Each index is processed exactly once; results must be
// written to per-index slots so the outcome is independent of scheduling.
template <class Fn>
void parallel_for(std::int64_t begin, std::int64_t end, int threads, Fn&& fn) {
    const std::int64_t count = end - begin;
    if (count <= 0) return;
    const int workers = std::min<std::int64_t>(resolve_threads(threads), count);
    if (workers <= 1) {
        for (std::int64_t i = begin; i < end; ++i) fn(i);
        return;
    }
    std::atomic<std::int64_t> cursor{begin};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            const std::int64_t i = cursor.fetch_add(1, std::memory_order_relaxed);
            if (i >= end || failed.load(std::memory_order_relaxed)) return;
            try {
                fn(i);
            } catch (...) {
                failed.store(true, std::memory_order_relaxed);
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (int t = 1; t < workers; ++t) pool.emplace_back(body);
    body();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace olab
