#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace predint {

// Number of worker threads: CALIB_THREADS if set to a positive integer,
// otherwise the hardware concurrency. Read per call so tests can vary it.
inline unsigned thread_count() {
    if (const char* env = std::getenv("CALIB_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Work is split into fixed-size blocks that are assigned to threads
// round-robin and reduced in block order, so results are bit-identical
// regardless of the thread count.
inline constexpr std::size_t parallel_block = 1024;

inline std::size_t block_count(std::size_t n) {
    return n == 0 ? 0 : (n - 1) / parallel_block + 1;
}

// fn(block_index, begin, end) must only touch state owned by its block.
template <class Fn>
void for_each_block(std::size_t n, Fn&& fn) {
    const std::size_t blocks = block_count(n);
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(thread_count(), blocks == 0 ? 1 : blocks));
    auto run = [&](unsigned worker) {
        for (std::size_t b = worker; b < blocks; b += workers) {
            const std::size_t begin = b * parallel_block;
            const std::size_t end = std::min(begin + parallel_block, n);
            fn(b, begin, end);
        }
    };
    if (workers <= 1) {
        run(0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run, w);
    run(0);
    for (auto& t : pool) t.join();
}

// Deterministic sum of value_at(i) for i in [0, n): per-block left-to-right
// partials, then a sequential pass over the partials in block order.
template <class Fn>
double ordered_sum(std::size_t n, Fn&& value_at) {
    std::vector<double> partial(block_count(n), 0.0);
    for_each_block(n, [&](std::size_t b, std::size_t begin, std::size_t end) {
        double s = 0.0;
        for (std::size_t i = begin; i < end; ++i) s += value_at(i);
        partial[b] = s;
    });
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

// Same layout with Kahan compensation inside each block; used for the wide
// metric means where plain accumulation would shed low-order bits.
template <class Fn>
double compensated_sum(std::size_t n, Fn&& value_at) {
    std::vector<double> partial(block_count(n), 0.0);
    for_each_block(n, [&](std::size_t b, std::size_t begin, std::size_t end) {
        double s = 0.0, c = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
            double t = value_at(i) - c;
            double u = s + t;
            c = (u - s) - t;
            s = u;
        }
        partial[b] = s;
    });
    double total = 0.0, c = 0.0;
    for (double p : partial) {
        double t = p - c;
        double u = total + t;
        c = (u - total) - t;
        total = u;
    }
    return total;
}

template <class Pred>
std::size_t ordered_count(std::size_t n, Pred&& pred) {
    std::vector<std::size_t> partial(block_count(n), 0);
    for_each_block(n, [&](std::size_t b, std::size_t begin, std::size_t end) {
        std::size_t k = 0;
        for (std::size_t i = begin; i < end; ++i) k += pred(i) ? 1 : 0;
        partial[b] = k;
    });
    std::size_t total = 0;
    for (std::size_t p : partial) total += p;
    return total;
}

}  // namespace predint
