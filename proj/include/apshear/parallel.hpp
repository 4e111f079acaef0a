#pragma once

#include <functional>

namespace apshear {

/// Runs fn(lo, hi) over disjoint chunks of [0, n) on `threads` workers
/// (0 = hardware concurrency). Chunk boundaries do not depend on timing,
/// so per-slot writers produce identical output for any thread count.
void parallel_for(int n, int threads, const std::function<void(int, int)>& fn);

}  // namespace apshear
