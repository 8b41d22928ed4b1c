#include "w2p/weighted_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace w2p {

weighted_graph::weighted_graph(NodeID n, const std::vector<std::pair<NodeID, NodeID>> &edges,
                               std::vector<NodeWeight> weights) {
    if (weights.size() != n) throw std::invalid_argument("weight vector size does not match n");
    for (NodeWeight w : weights)
        if (w < 0) throw std::invalid_argument("negative vertex weight");
    weights_ = std::move(weights);
    build(n, edges);
}

weighted_graph::weighted_graph(NodeID n, const std::vector<std::pair<NodeID, NodeID>> &edges) {
    weights_.assign(n, 1);
    build(n, edges);
}

void weighted_graph::build(NodeID n, const std::vector<std::pair<NodeID, NodeID>> &edges) {
    n_ = n;
    m_ = edges.size();
    std::vector<std::size_t> deg(n, 0);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        ++deg[u];
        ++deg[v];
    }
    offsets_.assign(n + 1, 0);
    for (NodeID v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    adjacency_.resize(2 * edges.size());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : edges) {
        adjacency_[cursor[u]++] = v;
        adjacency_[cursor[v]++] = u;
    }
    for (NodeID v = 0; v < n; ++v) {
        auto begin = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
        auto end = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
        std::sort(begin, end);
        if (std::adjacent_find(begin, end) != end)
            throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
    }
}

bool weighted_graph::adjacent(NodeID u, NodeID v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

void weighted_graph::set_weights(std::vector<NodeWeight> weights) {
    if (weights.size() != n_) throw std::invalid_argument("weight vector size does not match n");
    for (NodeWeight w : weights)
        if (w < 0) throw std::invalid_argument("negative vertex weight");
    weights_ = std::move(weights);
}

} // namespace w2p
