#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace fujimoto {

/// Runs job(0) ... job(count - 1) on up to `threads` workers with dynamic
/// scheduling. Jobs must write only to their own output slots.
template <class Job>
void parallel_for(std::size_t count, unsigned threads, Job&& job) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t c = 0; c < count; ++c) {
            job(c);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t c = next++; c < count; c = next++) {
                job(c);
            }
        });
    }
}

} // namespace fujimoto
