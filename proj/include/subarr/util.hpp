#ifndef SUBARR_UTIL_HPP
#define SUBARR_UTIL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace subarr {

inline unsigned hardware_width() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

// Runs fn(0..count-1) on up to `width` threads. Callers write results into
// index-addressed slots, so the output never depends on the width. The first
// exception thrown by any task is rethrown on the calling thread.
inline void parallel_for(std::size_t count, unsigned width,
                         const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    if (width <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(width, count));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) break;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace subarr

#endif
