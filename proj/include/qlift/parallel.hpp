#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace qlift::par {

// Worker count used by parallel kernels. 1 selects the plain serial loop,
// which is the reference implementation the tests compare against.
int max_workers();
void set_max_workers(int n);

// Parallel for over [0, n). Iterations must be independent; with jobs == 1
// this is exactly `for (i = 0; i < n; ++i) f(i)`.
void for_range(std::int64_t n, const std::function<void(std::int64_t)>& f);

// Chunked map-reduce with a deterministic merge: the index space is split
// into a fixed number of chunks (independent of the worker count), each chunk
// produces a partial T, and partials are folded in chunk order. Results are
// therefore bit-identical for any number of workers.
template <typename T, typename Map, typename Fold>
T map_reduce(std::int64_t n, T init, Map&& map_chunk, Fold&& fold) {
    if (n <= 0) return init;
    const std::int64_t chunks = n < 256 ? n : 256;
    std::vector<T> partial(chunks, init);
    for_range(chunks, [&](std::int64_t c) {
        std::int64_t lo = n * c / chunks;
        std::int64_t hi = n * (c + 1) / chunks;
        partial[c] = map_chunk(lo, hi);
    });
    T acc = init;
    for (std::int64_t c = 0; c < chunks; ++c) acc = fold(acc, partial[c]);
    return acc;
}

}  // namespace qlift::par
