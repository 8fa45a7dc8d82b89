#pragma once

#include <cstddef>
#include <functional>

namespace wt {

/// Worker count: hardware concurrency, capped by WALK_TRANSFER_THREADS when set.
int worker_count();

/// Calls body(i) for i in [0, count), spread over worker_count() threads in
/// contiguous blocks. body must only write to slots owned by index i.
/// The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace wt
