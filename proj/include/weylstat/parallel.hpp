#ifndef WEYLSTAT_PARALLEL_HPP
#define WEYLSTAT_PARALLEL_HPP

#include <functional>

namespace weylstat {

// Run fn(c) for every c in [0, num_chunks) on up to `threads` workers.
// Chunks are claimed through an atomic counter; callers must make fn(c) write
// only to per-chunk storage so that results do not depend on scheduling.
// The first exception thrown by any chunk is rethrown after all workers join.
void parallel_chunks(int num_chunks, int threads, const std::function<void(int)>& fn);

} // namespace weylstat

#endif
