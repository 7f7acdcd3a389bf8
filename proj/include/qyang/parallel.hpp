#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace qyang {

/// Runs fn(index) once for every index in [0, count). With jobs > 1 the
/// indices are distributed over a worker pool; results must be written to
/// per-index slots by the caller so the outcome is identical at any job
/// count.
template <class Fn>
void parallel_instances(size_t count, int jobs, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (size_t p = 0; p < count; ++p) fn(p);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t p = next.fetch_add(1);
            if (p >= count) return;
            fn(p);
        }
    };
    std::vector<std::thread> pool;
    const size_t n = std::min<size_t>(static_cast<size_t>(jobs), count);
    pool.reserve(n);
    for (size_t t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace qyang
