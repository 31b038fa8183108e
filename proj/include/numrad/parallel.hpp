#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace numrad {

// Runs fn(i) for i in [0, n) on `threads` workers, collecting results into
// slot i. Each task must derive its own randomness from a pre-assigned seed,
// which makes the output identical for any worker count.
template <typename T>
std::vector<T> parallel_map(int n, int threads, const std::function<T(int)>& fn) {
    std::vector<T> out(static_cast<std::size_t>(n));
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= n) return;
            out[static_cast<std::size_t>(i)] = fn(i);
        }
    };
    int k = std::min(threads, n);
    pool.reserve(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace numrad
