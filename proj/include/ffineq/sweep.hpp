#pragma once

#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

namespace ffineq {

// Splits [0, count) into contiguous chunks, runs `body(begin, end)` on
// each (possibly across threads), and left-folds the per-chunk results
// with `merge` in ascending chunk order. Because chunks are contiguous
// and merged in order, the result is independent of the worker count --
// callers only need their accumulator merge to respect chunk order.
template <typename Acc, typename Body, typename Merge>
Acc sweep_reduce(std::uint64_t count, unsigned workers, Body body, Merge merge) {
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    constexpr std::uint64_t kMinChunk = 4096;
    const std::uint64_t max_chunks = count / kMinChunk + 1;
    const std::uint64_t n_chunks =
        std::min<std::uint64_t>(workers, std::min<std::uint64_t>(max_chunks, count ? count : 1));

    if (n_chunks <= 1) {
        return body(0, count);
    }

    std::vector<Acc> results(n_chunks);
    std::vector<std::thread> threads;
    threads.reserve(n_chunks);
    for (std::uint64_t c = 0; c < n_chunks; ++c) {
        const std::uint64_t begin = count / n_chunks * c + std::min<std::uint64_t>(c, count % n_chunks);
        const std::uint64_t end =
            count / n_chunks * (c + 1) + std::min<std::uint64_t>(c + 1, count % n_chunks);
        threads.emplace_back([&results, c, begin, end, &body] { results[c] = body(begin, end); });
    }
    for (auto& t : threads) t.join();

    Acc acc = std::move(results[0]);
    for (std::uint64_t c = 1; c < n_chunks; ++c) {
        acc = merge(std::move(acc), std::move(results[c]));
    }
    return acc;
}

} // namespace ffineq
