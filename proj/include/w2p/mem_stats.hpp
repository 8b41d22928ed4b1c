#pragma once

#include <cstddef>

namespace w2p::mem_stats {

// Allocator statistics hook: global operator new/delete feed these counters.
std::size_t current_bytes();
std::size_t peak_bytes();
void reset_peak();

} // namespace w2p::mem_stats
