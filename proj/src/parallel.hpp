#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace pisano::detail {

inline unsigned effective_jobs(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Evaluates fn(i) for i in [lo, hi] on up to `jobs` threads; results come
/// back in index order regardless of scheduling. fn must be safe to call
/// concurrently.
template <class Fn>
auto parallel_map(std::uint64_t lo, std::uint64_t hi, unsigned jobs, Fn&& fn) {
    using Result = decltype(fn(lo));
    std::vector<Result> out;
    if (hi < lo) return out;
    const std::uint64_t n = hi - lo + 1;
    out.resize(n);
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(effective_jobs(jobs), n));
    if (workers <= 1) {
        for (std::uint64_t i = 0; i < n; ++i) out[i] = fn(lo + i);
        return out;
    }
    constexpr std::uint64_t chunk = 32;
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::uint64_t start = next.fetch_add(chunk);
            if (start >= n) return;
            const std::uint64_t stop = std::min(n, start + chunk);
            for (std::uint64_t i = start; i < stop; ++i) out[i] = fn(lo + i);
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    return out;
}

}  // namespace pisano::detail
