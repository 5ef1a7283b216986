#pragma once

#include <cstdint>
#include <functional>

namespace walkmom {

// Resolves a requested worker count: 0 means "use the hardware concurrency",
// and the result is always >= 1.
unsigned effective_threads(unsigned requested);

// Splits [0, count) into at most `threads` contiguous chunks and runs
// fn(chunk_index, begin, end) for each, on worker threads when threads > 1.
// Chunk boundaries depend only on (count, threads), so per-chunk results can
// be merged in chunk order for output that is independent of scheduling.
void parallel_chunks(std::int64_t count, unsigned threads,
                     const std::function<void(unsigned, std::int64_t, std::int64_t)>& fn);

} // namespace walkmom
