#pragma once

#include <cstdint>
#include <functional>

namespace wvd {

/// Worker count: WVD_THREADS when set (clamped to >= 1), otherwise the
/// hardware concurrency.
unsigned thread_count();

/// Splits [lo, hi) into contiguous chunks, one worker thread per chunk:
/// fn(chunk_lo, chunk_hi, chunk_index). Callers combine per-chunk results
/// in index order, which keeps every reduction deterministic.
void parallel_ranges(
    std::uint64_t lo, std::uint64_t hi,
    const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& fn,
    unsigned threads = 0);

}  // namespace wvd
