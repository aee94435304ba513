#ifndef GRAPHMETRIC_PARALLEL_HPP
#define GRAPHMETRIC_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace graphmetric {

// Worker count: GRAPHMETRIC_THREADS when set to a positive integer
// (0 or unset means auto), else hardware concurrency.
inline unsigned thread_cap() {
    if (const char* env = std::getenv("GRAPHMETRIC_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Runs fn(begin, end) over consecutive blocks of [0, n). Blocks are handed to
// workers dynamically, so fn must only write to slots owned by its index
// range; under that contract results are identical for every thread count.
// If any block throws, the exception from the lowest-indexed failing block is
// rethrown after all workers finish.
template <typename Fn>
void parallel_for_blocks(std::int64_t n, std::int64_t block, Fn&& fn) {
    if (n <= 0) return;
    if (block <= 0) block = 1;
    const std::int64_t nblocks = (n + block - 1) / block;
    const auto run_block = [&](std::int64_t b) { fn(b * block, std::min(n, (b + 1) * block)); };

    const unsigned workers =
        static_cast<unsigned>(std::min<std::int64_t>(thread_cap(), nblocks));
    if (workers <= 1) {
        for (std::int64_t b = 0; b < nblocks; ++b) run_block(b);
        return;
    }

    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(nblocks));
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::int64_t b = next.fetch_add(1); b < nblocks; b = next.fetch_add(1)) {
                try {
                    run_block(b);
                } catch (...) {
                    errors[static_cast<std::size_t>(b)] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace graphmetric

#endif
