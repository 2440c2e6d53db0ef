#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace mrd {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Calls body(begin, end, worker) over [0, n) in chunks pulled from a shared
/// counter. Results must be combined by the caller with an order-independent
/// reduction.
template <class Body>
void parallel_chunks(std::size_t n, unsigned threads, std::size_t chunk, Body body) {
    threads = resolve_threads(threads);
    chunk = std::max<std::size_t>(chunk, 1);
    if (threads == 1 || n <= chunk) {
        body(std::size_t{0}, n, 0u);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&](unsigned id) {
        for (;;) {
            const std::size_t b = next.fetch_add(chunk);
            if (b >= n) break;
            body(b, std::min(n, b + chunk), id);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads - 1);
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
    worker(0);
    for (auto& th : pool) th.join();
}

}  // namespace mrd
