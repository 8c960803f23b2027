#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace hhgabber {

/// Worker cap from HHGABBER_THREADS (default 1). Output of every operation
/// is identical at any setting; the variable only caps internal fan-out.
inline unsigned thread_cap() {
    const char* env = std::getenv("HHGABBER_THREADS");
    if (!env)
        return 1;
    long v = std::strtol(env, nullptr, 10);
    if (v < 1)
        return 1;
    return static_cast<unsigned>(v);
}

/// Runs fn(0..count-1), partitioned over at most thread_cap() workers.
/// Tasks must be independent; results indexed by slot keep ordering
/// deterministic.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    unsigned workers = thread_cap();
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    if (workers > count)
        workers = static_cast<unsigned>(count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < count; i += workers)
                fn(i);
        });
    }
    for (auto& t : pool)
        t.join();
}

}  // namespace hhgabber
