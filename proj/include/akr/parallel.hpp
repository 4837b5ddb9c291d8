#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace akr {

/// Runs fn(i) for i in [0, count) on up to `threads` workers. Tasks must be
/// independent; callers are responsible for writing results into distinct
/// slots so the output order is deterministic.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    const unsigned nw = std::min<std::size_t>(threads, count);
    pool.reserve(nw);
    for (unsigned t = 0; t < nw; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

inline unsigned default_threads() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

}  // namespace akr
