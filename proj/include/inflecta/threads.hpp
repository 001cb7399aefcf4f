#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace inflecta {

// worker count honoring the INFLECTA_THREADS cap; defaults to the hardware
inline int thread_budget() {
    if (const char* env = std::getenv("INFLECTA_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Deterministic parallel map: worker w takes indices congruent to w, results
// are keyed by index, so the outcome never depends on scheduling. The body
// must not throw; record failures by index and deal with them afterwards.
template <class F>
void parallel_for(int count, F&& body) {
    const int workers = std::min(thread_budget(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&body, w, workers, count] {
            for (int i = w; i < count; i += workers) body(i);
        });
    for (auto& t : pool) t.join();
}

} // namespace inflecta
