#pragma once

#include <algorithm>
#include <vector>

#include "w2p/defs.hpp"

namespace w2p {

// A candidate vertex set with its cached weight. Vertices are kept sorted.
struct solution {
    std::vector<NodeID> nodes;
    NodeWeight weight = 0;

    bool contains(NodeID v) const { return std::binary_search(nodes.begin(), nodes.end(), v); }

    void insert(NodeID v, NodeWeight w) {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), v);
        if (it != nodes.end() && *it == v) return;
        nodes.insert(it, v);
        weight += w;
    }

    void normalize() {
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    }

    bool operator==(const solution &other) const = default;
};

} // namespace w2p
