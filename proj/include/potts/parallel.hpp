#pragma once

#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>
#include <atomic>
#include <functional>

namespace potts {

/// Worker count: POTTS_THREADS if set, otherwise the hardware concurrency.
inline unsigned thread_count() {
    if (const char* env = std::getenv("POTTS_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Run body(i) for i in [0,n). Work is handed out by an atomic counter, so
/// results must be written to per-index slots; callers combine them in index
/// order to keep outputs deterministic.
template <typename F>
void parallel_for(std::size_t n, F&& body) {
    unsigned workers = thread_count();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    pool.reserve(spawn);
    for (unsigned t = 1; t < spawn; ++t) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
}

} // namespace potts
