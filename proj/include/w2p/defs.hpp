#pragma once

#include <cstdint>
#include <limits>

namespace w2p {

using NodeID = std::uint32_t;
using NodeWeight = std::int64_t;
using EdgeID = std::uint64_t;

constexpr NodeID INVALID_NODE = std::numeric_limits<NodeID>::max();

} // namespace w2p
