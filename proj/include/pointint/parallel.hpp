#pragma once

#include <cstddef>
#include <functional>

namespace pointint {

/// Worker-thread count from POINTINT_THREADS; 0 (or unset/garbage) = serial.
int configured_threads();

/// Runs fn over [0, count) split into contiguous chunks, one per worker.
/// Serial when configured_threads() <= 1.  Chunk boundaries depend only on
/// (count, thread count), so results merged by index are deterministic.
void parallel_chunks(std::size_t count,
                     const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace pointint
