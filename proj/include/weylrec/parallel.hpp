#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace weylrec {

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Callers store results
// by index, so aggregation order stays deterministic regardless of jobs.
template <class Fn>
void parallel_for(long n, int jobs, Fn&& fn) {
    if (n <= 0) return;
    if (jobs <= 1 || n == 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    int workers = static_cast<int>(std::min<long>(jobs, n));
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (long i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace weylrec
