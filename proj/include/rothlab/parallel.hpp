#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "rothlab/arith.hpp"

namespace rothlab {

/// Thread cap from ROTHLAB_THREADS, else the hardware concurrency.
inline int default_threads() {
    if (const char* env = std::getenv("ROTHLAB_THREADS")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

/// Runs body(lo, hi) over contiguous chunks of [begin, end). Each index is
/// owned by exactly one chunk, so writes to per-index slots need no locking
/// and the result does not depend on the thread count.
template <class Body>
void parallel_for(Int begin, Int end, int threads, Body&& body) {
    const Int total = end - begin;
    if (total <= 0) return;
    const Int workers = std::clamp<Int>(threads, 1, total);
    if (workers == 1) {
        body(begin, end);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (Int w = 0; w < workers; ++w) {
        const Int lo = begin + total * w / workers;
        const Int hi = begin + total * (w + 1) / workers;
        pool.emplace_back([&, lo, hi] {
            try {
                body(lo, hi);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

} // namespace rothlab
