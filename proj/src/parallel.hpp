#pragma once

#include <cstddef>
#include <functional>

namespace covagram::detail {

// Worker-count cap from COVAGRAM_THREADS (0 or unset = hardware concurrency).
unsigned thread_budget();

// Splits [0, count) into contiguous chunks and runs fn(begin, end) on each,
// possibly on several threads. Callers own determinism: fn must write only
// to per-index slots.
void parallel_chunks(std::size_t count, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace covagram::detail
