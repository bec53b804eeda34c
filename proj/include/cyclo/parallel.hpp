#pragma once

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cyclo::par {

inline int resolve_workers(int workers) {
#ifdef _OPENMP
    return workers > 0 ? workers : omp_get_max_threads();
#else
    (void)workers;
    return 1;
#endif
}

// Deterministic parallel map over [begin, end): the range is split into
// fixed-size chunks independent of the worker count, chunks run in
// parallel, and the per-chunk results come back in chunk order.  Any
// associative merge over that vector is then schedule-independent.
template <typename Result, typename Fn>
std::vector<Result> map_chunks(std::uint64_t begin, std::uint64_t end, std::uint64_t chunk,
                               [[maybe_unused]] int workers, Fn&& fn) {
    if (end <= begin) return {};
    const std::uint64_t span = end - begin;
    const std::uint64_t nchunks = (span + chunk - 1) / chunk;
    std::vector<Result> results(nchunks);
#ifdef _OPENMP
    const int nthreads = resolve_workers(workers);
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(nchunks); ++c) {
        const std::uint64_t lo = begin + static_cast<std::uint64_t>(c) * chunk;
        const std::uint64_t hi = lo + chunk < end ? lo + chunk : end;
        results[static_cast<std::size_t>(c)] = fn(lo, hi);
    }
#else
    for (std::uint64_t c = 0; c < nchunks; ++c) {
        const std::uint64_t lo = begin + c * chunk;
        const std::uint64_t hi = lo + chunk < end ? lo + chunk : end;
        results[c] = fn(lo, hi);
    }
#endif
    return results;
}

} // namespace cyclo::par
