#pragma once

#include <cstddef>
#include <functional>

namespace glyphgeom {

/// Worker cap: GLYPHGEOM_THREADS when set (minimum 1), otherwise
/// hardware concurrency.
unsigned max_threads();

/// Run fn(i) for i in [0, n) across worker threads. Each index is
/// processed exactly once; callers keep determinism by writing to
/// per-index slots.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace glyphgeom
