#pragma once

#include <cstddef>
#include <cstdint>

namespace vdakey {

// Runs body(block_index) for every block, optionally across OpenMP threads.
// Work is partitioned in fixed blocks with counter-derived random streams,
// so the serial and parallel paths produce bit-identical results; the serial
// path is kept as the reference implementation for tests and benchmarks.
template <class Body>
void for_blocks(std::size_t blocks, bool parallel, Body&& body) {
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b)
      body(static_cast<std::size_t>(b));
  } else {
    for (std::size_t b = 0; b < blocks; ++b) body(b);
  }
}

}  // namespace vdakey
