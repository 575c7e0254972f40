#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace artin {

/// Worker count to use for `requested` (0 = hardware concurrency), never more than `n` items.
inline unsigned resolve_workers(unsigned requested, std::size_t n) {
    unsigned w = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (n < w) w = static_cast<unsigned>(std::max<std::size_t>(n, 1));
    return w;
}

/// Calls f(i) for i in [0, n) over a static partition into contiguous chunks.
/// The first exception thrown by any worker is rethrown after all workers join.
template <class F>
void parallel_for(std::size_t n, unsigned workers, F&& f) {
    const unsigned w = resolve_workers(workers, n);
    if (w <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (unsigned t = 0; t < w; ++t) {
        const std::size_t lo = n * t / w, hi = n * (t + 1) / w;
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

/// out[i] = f(items[i]), in input order regardless of worker count.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, unsigned workers, F&& f) {
    using R = decltype(f(items[0]));
    std::vector<R> out(items.size());
    parallel_for(items.size(), workers, [&](std::size_t i) { out[i] = f(items[i]); });
    return out;
}

}  // namespace artin
