#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace ssm {

inline unsigned resolve_thread_count(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, n) into contiguous blocks, one per worker, and calls
/// body(begin, end, worker). Block boundaries depend only on n and the
/// worker count, so per-worker partial results can be merged in worker order
/// for reproducible sums. The first exception thrown by any worker is
/// rethrown.
template <typename Body>
void parallel_blocks(std::size_t n, unsigned threads, Body&& body) {
    unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_thread_count(threads), std::max<std::size_t>(n, 1)));
    if (workers <= 1) {
        body(std::size_t{0}, n, 0u);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            std::size_t begin = n * w / workers;
            std::size_t end = n * (w + 1) / workers;
            pool.emplace_back([&, begin, end, w] {
                try {
                    body(begin, end, w);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace ssm
