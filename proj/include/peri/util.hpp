#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace peri {

/// Run fn(i) for i in [0, count) on up to `threads` workers with static
/// chunking. Callers collect results into per-index slots, so the outcome is
/// independent of the thread count.
inline void parallel_for(std::size_t count, unsigned threads,
                         const std::function<void(std::size_t)>& fn) {
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    unsigned workers = (unsigned)std::min<std::size_t>(threads, count);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    for (auto& t : pool) t.join();
}

} // namespace peri
