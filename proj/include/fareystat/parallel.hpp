#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace fareystat {

// Applies fn(index) for index in [lo, hi) on `threads` workers and returns the
// results in index order. Work is handed out in fixed-size chunks, so the
// result layout (and any ordered reduction over it) does not depend on the
// thread count or scheduling.
template <class T, class F>
std::vector<T> map_ordered(std::int64_t lo, std::int64_t hi, int threads, F fn) {
    const std::int64_t n = hi > lo ? hi - lo : 0;
    std::vector<T> results(static_cast<std::size_t>(n));
    if (n == 0)
        return results;
    if (threads < 2 || n == 1) {
        for (std::int64_t idx = lo; idx < hi; ++idx)
            results[static_cast<std::size_t>(idx - lo)] = fn(idx);
        return results;
    }

    constexpr std::int64_t kGrain = 16;
    const std::int64_t chunks = (n + kGrain - 1) / kGrain;
    std::atomic<std::int64_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::int64_t ci = next.fetch_add(1);
            if (ci >= chunks)
                return;
            const std::int64_t begin = lo + ci * kGrain;
            const std::int64_t end = std::min(begin + kGrain, hi);
            for (std::int64_t idx = begin; idx < end; ++idx)
                results[static_cast<std::size_t>(idx - lo)] = fn(idx);
        }
    };
    {
        std::vector<std::jthread> pool;
        const int nworkers = static_cast<int>(std::min<std::int64_t>(threads, chunks));
        pool.reserve(static_cast<std::size_t>(nworkers));
        for (int t = 0; t < nworkers; ++t)
            pool.emplace_back(worker);
    }  // joins before results are handed back
    return results;
}

}  // namespace fareystat
