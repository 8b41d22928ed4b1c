#pragma once

#include <span>
#include <utility>
#include <vector>

#include "w2p/defs.hpp"

namespace w2p {

// Immutable vertex-weighted graph with sorted adjacency lists.
// Vertex ids are 0..n-1, weights are non-negative, adjacency is symmetric,
// no self-loops and no duplicate edges.
class weighted_graph {
  public:
    weighted_graph() = default;

    // Builds from an undirected edge list. Throws std::invalid_argument on
    // self-loops, duplicate edges, out-of-range endpoints or negative weights.
    weighted_graph(NodeID n, const std::vector<std::pair<NodeID, NodeID>> &edges,
                   std::vector<NodeWeight> weights);

    // Unit weights.
    weighted_graph(NodeID n, const std::vector<std::pair<NodeID, NodeID>> &edges);

    NodeID number_of_nodes() const { return n_; }
    EdgeID number_of_edges() const { return m_; }

    std::span<const NodeID> neighbors(NodeID v) const {
        return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    NodeID degree(NodeID v) const { return static_cast<NodeID>(offsets_[v + 1] - offsets_[v]); }
    NodeWeight weight(NodeID v) const { return weights_[v]; }
    const std::vector<NodeWeight> &weights() const { return weights_; }

    bool adjacent(NodeID u, NodeID v) const;

    // Replaces the weight vector (same size, non-negative entries).
    void set_weights(std::vector<NodeWeight> weights);

  private:
    void build(NodeID n, const std::vector<std::pair<NodeID, NodeID>> &edges);

    NodeID n_ = 0;
    EdgeID m_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeID> adjacency_;
    std::vector<NodeWeight> weights_;
};

} // namespace w2p
