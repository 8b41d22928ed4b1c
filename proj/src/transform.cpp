#include "w2p/transform.hpp"

#include <algorithm>
#include <stdexcept>

#include "w2p/oracle.hpp"

namespace w2p {

namespace {

// distance-<=2 partners of v: direct neighbors, stored links, and neighbors
// of neighbors
void square_row(const link_graph &lg, NodeID v, std::vector<NodeID> &row) {
    row.clear();
    auto eds = lg.edges(v);
    row.insert(row.end(), eds.begin(), eds.end());
    auto lnk = lg.links(v);
    row.insert(row.end(), lnk.begin(), lnk.end());
    for (NodeID u : eds)
        for (NodeID x : lg.edges(u))
            if (x != v) row.push_back(x);
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
}

} // namespace

mwis_instance square(const link_graph &lg) {
    mwis_instance inst;
    inst.to_source = lg.live_nodes();
    inst.from_source.assign(lg.capacity(), INVALID_NODE);
    for (NodeID i = 0; i < inst.to_source.size(); ++i) inst.from_source[inst.to_source[i]] = i;

    std::vector<std::pair<NodeID, NodeID>> edges;
    std::vector<NodeWeight> weights(inst.to_source.size());
    std::vector<NodeID> row;
    for (NodeID i = 0; i < inst.to_source.size(); ++i) {
        NodeID v = inst.to_source[i];
        weights[i] = lg.weight(v);
        square_row(lg, v, row);
        for (NodeID u : row) {
            NodeID j = inst.from_source[u];
            if (i < j) edges.emplace_back(i, j);
        }
    }
    inst.graph = weighted_graph(static_cast<NodeID>(inst.to_source.size()), edges, std::move(weights));
    return inst;
}

EdgeID count_square_edges(const link_graph &lg) {
    EdgeID twice = 0;
    std::vector<NodeID> row;
    for (NodeID v : lg.live_nodes()) {
        square_row(lg, v, row);
        twice += row.size();
    }
    return twice / 2;
}

transform_result reduce_and_transform(const weighted_graph &g, const std::string &config,
                                      std::uint64_t seed) {
    return reduce_and_transform(link_graph::from_graph(g), config, seed);
}

transform_result reduce_and_transform(const link_graph &lg, const std::string &config,
                                      std::uint64_t seed, bool shuffle_candidates) {
    transform_result res;
    res.stats.config = config;
    res.stats.n_input = lg.live_count();
    res.stats.m_square_input = count_square_edges(lg);
    if (config == "transform") {
        res.reduced = reduced_instance::wrap(lg);
    } else {
        res.reduced = reduce_exhaustively(lg, reduction_config::by_name(config), seed, shuffle_candidates);
    }
    res.mwis = square(res.reduced.graph);
    res.stats.n_kernel = res.reduced.graph.live_count();
    res.stats.m_square_kernel = res.mwis.graph.number_of_edges();
    res.stats.offset = res.reduced.offset;
    res.stats.fully_reduced = res.reduced.graph.empty();
    res.stats.rule_counts = res.reduced.rule_counts;
    return res;
}

solution lift(const solution &mwis_sol, const mwis_instance &inst, const reduced_instance &ri) {
    if (!is_independent(inst.graph, mwis_sol.nodes))
        throw std::invalid_argument("lift: solution is not independent in the transformed instance");
    solution on_kernel;
    for (NodeID i : mwis_sol.nodes) {
        NodeID v = inst.to_source[i];
        on_kernel.nodes.push_back(v);
        on_kernel.weight += ri.graph.weight(v);
    }
    on_kernel.normalize();
    return restore(ri, on_kernel);
}

} // namespace w2p
