#pragma once

#include <atomic>
#include <thread>
#include <utility>
#include <vector>

namespace simplexeig::detail {

// Runs fn(i) for i in [begin, end) across hardware threads. Work items
// write to disjoint slots, so results do not depend on scheduling.
template <class Fn>
void parallel_for(int begin, int end, Fn&& fn)
{
    const int count = end - begin;
    if (count <= 0) return;
    unsigned hw = std::thread::hardware_concurrency();
    int workers = static_cast<int>(hw == 0 ? 1 : hw);
    if (workers > count) workers = count;
    if (workers <= 1) {
        for (int i = begin; i < end; ++i) fn(i);
        return;
    }

    constexpr int kChunk = 32;
    std::atomic<int> next{begin};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const int lo = next.fetch_add(kChunk);
                if (lo >= end) return;
                const int hi = std::min(end, lo + kChunk);
                for (int i = lo; i < hi; ++i) fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace simplexeig::detail
